//! Construction expressions:
//!
//! ```text
//! expr  := CATALOG '(' INT ')' | 'GR' '(' expr ',' group ')' | 'XGR' '(' expr ',' group ')'
//!        | 'U' '(' expr ')' | 'T' '(' expr ',' INT ')' | 'CT' '(' expr ',' INT ')'
//!        | 'PQ' '(' expr ',' INT ')'
//! group := 'C' INT | '@' filename
//! ```
//!
//! `CATALOG` is one of `A B C D Dalt Z N`.

use rickart_core::catalog::{CatalogKey, FineKind};
use rickart_core::recipe::{GroupRecipe, Recipe};

use crate::error::{read_file, CliError, Result};
use crate::spec_doc::parse_group_doc;

struct Parser<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn error(&self, message: impl Into<String>) -> CliError {
        let before = &self.text[..self.pos];
        let line = before.matches('\n').count() + 1;
        let col = before.chars().rev().take_while(|&c| c != '\n').count() + 1;
        CliError::parse(line, col, message)
    }

    fn skip_ws(&mut self) {
        while let Some(c) = self.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.pos += c.len_utf8();
        }
    }

    fn peek(&self) -> Option<char> {
        self.text[self.pos..].chars().next()
    }

    fn expect(&mut self, want: char) -> Result<()> {
        self.skip_ws();
        match self.peek() {
            Some(c) if c == want => {
                self.pos += 1;
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected `{want}`, found `{c}`"))),
            None => Err(self.error(format!("expected `{want}`, found end of input"))),
        }
    }

    fn ident(&mut self) -> Result<&'a str> {
        self.skip_ws();
        let start = self.pos;
        while let Some(c) = self.peek() {
            if !(c.is_ascii_alphabetic() || c == '\'') {
                break;
            }
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected a name"));
        }
        Ok(&self.text[start..self.pos])
    }

    fn int(&mut self) -> Result<u64> {
        self.skip_ws();
        let start = self.pos;
        while matches!(self.peek(), Some(c) if c.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.error("expected an integer"));
        }
        self.text[start..self.pos]
            .parse()
            .map_err(|_| self.error("integer out of range"))
    }

    fn size(&mut self) -> Result<usize> {
        let at = self.pos;
        let n = self.int()?;
        usize::try_from(n).map_err(|_| {
            self.pos = at;
            self.error("integer out of range")
        })
    }

    fn group(&mut self) -> Result<GroupRecipe> {
        self.skip_ws();
        if self.peek() == Some('@') {
            self.pos += 1;
            let start = self.pos;
            while matches!(self.peek(), Some(c) if c != ')' && c != ',' && !c.is_whitespace()) {
                self.pos += self.peek().unwrap().len_utf8();
            }
            let path = &self.text[start..self.pos];
            if path.is_empty() {
                return Err(self.error("expected a file name after `@`"));
            }
            let doc = parse_group_doc(&read_file(path)?)?;
            return Ok(GroupRecipe::Table {
                source: path.to_string(),
                cayley: doc.cayley,
                labels: doc.labels,
            });
        }
        let at = self.pos;
        let name = self.ident()?;
        if name != "C" {
            self.pos = at;
            return Err(self.error(format!("unknown group `{name}`; expected `C n` or `@file`")));
        }
        Ok(GroupRecipe::Cyclic(self.size()?))
    }

    fn expr(&mut self) -> Result<Recipe> {
        self.skip_ws();
        let at = self.pos;
        let name = self.ident()?;
        self.expect('(')?;
        let recipe = match name {
            "GR" | "XGR" => {
                let base = self.expr()?;
                self.expect(',')?;
                let g = self.group()?;
                if name == "GR" {
                    base.group_ring(g)
                } else {
                    base.extension(g)
                }
            }
            "U" => self.expr()?.unitization(),
            "T" | "CT" | "PQ" => {
                let base = self.expr()?;
                self.expect(',')?;
                let n = self.size()?;
                match name {
                    "T" => base.triangular(n),
                    "CT" => base.const_diag(n),
                    _ => base.poly_quot(n),
                }
            }
            _ => {
                let arg = self.int()?;
                let key = match (name, FineKind::parse(name)) {
                    (_, Some(kind)) => CatalogKey::Fine(kind, arg),
                    ("Z", None) => CatalogKey::Z(arg),
                    ("N", None) => CatalogKey::Null(arg),
                    _ => {
                        self.pos = at;
                        return Err(self.error(format!("unknown ring constructor `{name}`")));
                    }
                };
                Recipe::Catalog(key)
            }
        };
        self.expect(')')?;
        Ok(recipe)
    }
}

pub fn parse_construction(text: &str) -> Result<Recipe> {
    let mut parser = Parser { text, pos: 0 };
    let recipe = parser.expr()?;
    parser.skip_ws();
    if parser.pos != text.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(recipe)
}

/// A group argument on its own: `C n` or `@file`.
pub fn parse_group_expr(text: &str) -> Result<GroupRecipe> {
    let mut parser = Parser { text, pos: 0 };
    let group = parser.group()?;
    parser.skip_ws();
    if parser.pos != text.len() {
        return Err(parser.error("trailing input"));
    }
    Ok(group)
}

/// The normalised form; `parse_construction(print(r)) == r`.
pub fn print(recipe: &Recipe) -> String {
    recipe.to_string()
}
