//! Certificate output in JSON or plain text. Timings always come last so
//! everything before them is reproducible.

use std::fmt::Write;

use rickart_core::harness::{Certificate, Status, StepKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Text,
}

pub fn emit_certificate(cert: &Certificate, format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let mut out = cert.to_json();
            out.push('\n');
            out.into_bytes()
        }
        Format::Text => text(cert).into_bytes(),
    }
}

fn text(cert: &Certificate) -> String {
    let mut out = String::new();
    let params = serde_json::to_string(&cert.parameters).expect("parameters serialise");
    let _ = writeln!(out, "claim: {}", cert.claim.name());
    let _ = writeln!(out, "parameters: {params}");
    let _ = writeln!(out, "verdict: {}", if cert.verdict { "pass" } else { "fail" });
    for step in &cert.steps {
        let status = match step.status {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Skipped => "skipped",
        };
        let kind = match step.kind {
            StepKind::Verified => "verified",
            StepKind::Cited => "cited",
        };
        let _ = writeln!(out, "[{status}] {} ({kind}): {}", step.name, step.description);
        if !step.chain_sizes.is_empty() {
            let sizes: Vec<String> = step.chain_sizes.iter().map(u64::to_string).collect();
            let _ = writeln!(out, "    chain sizes by power: {}", sizes.join(", "));
        }
    }
    for note in &cert.notes {
        let _ = writeln!(out, "note: {note}");
    }
    let _ = writeln!(out, "timings: total {:.1} ms", cert.timings.total_ms);
    out
}

/// The output with its timing segment removed, for byte comparisons.
pub fn content_part(bytes: &[u8], format: Format) -> Vec<u8> {
    match format {
        Format::Json => {
            let text = String::from_utf8_lossy(bytes);
            match Certificate::from_json(&text) {
                Ok(cert) => cert.content_bytes(),
                Err(_) => bytes.to_vec(),
            }
        }
        Format::Text => {
            let text = String::from_utf8_lossy(bytes);
            let cut = text.find("timings:").unwrap_or(text.len());
            text[..cut].as_bytes().to_vec()
        }
    }
}
