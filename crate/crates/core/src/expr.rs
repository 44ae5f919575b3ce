//! Graph expressions used on the command line.
//!
//! ```text
//! expr := path:N | cycle:N | complete:N | threesun | file:PATH
//!       | tensor(expr, expr) | cartesian(expr, expr) | lex(expr, expr)
//! ```

use std::fmt;
use std::path::PathBuf;

use thiserror::Error;

use crate::edgelist::{self, EdgeListError};
use crate::graph::{Graph, GraphError};

#[derive(Debug, Error)]
pub enum ExprError {
    #[error("at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("{path}: {source}")]
    EdgeList { path: String, source: EdgeListError },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Product {
    Tensor,
    Cartesian,
    Lex,
}

impl Product {
    fn keyword(self) -> &'static str {
        match self {
            Product::Tensor => "tensor",
            Product::Cartesian => "cartesian",
            Product::Lex => "lex",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GraphExpr {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    ThreeSun,
    File(PathBuf),
    Product(Product, Box<GraphExpr>, Box<GraphExpr>),
}

impl fmt::Display for GraphExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphExpr::Path(n) => write!(f, "path:{n}"),
            GraphExpr::Cycle(n) => write!(f, "cycle:{n}"),
            GraphExpr::Complete(n) => write!(f, "complete:{n}"),
            GraphExpr::ThreeSun => write!(f, "threesun"),
            GraphExpr::File(p) => write!(f, "file:{}", p.display()),
            GraphExpr::Product(op, a, b) => write!(f, "{}({a},{b})", op.keyword()),
        }
    }
}

struct Parser<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn err<T>(&self, msg: impl Into<String>) -> Result<T, ExprError> {
        Err(ExprError::Syntax {
            pos: self.pos,
            msg: msg.into(),
        })
    }

    fn skip_ws(&mut self) {
        while self.src[self.pos..].starts_with(char::is_whitespace) {
            self.pos += self.src[self.pos..].chars().next().map_or(1, char::len_utf8);
        }
    }

    fn eat(&mut self, c: char) -> Result<(), ExprError> {
        self.skip_ws();
        if self.src[self.pos..].starts_with(c) {
            self.pos += c.len_utf8();
            Ok(())
        } else {
            self.err(format!("expected {c:?}"))
        }
    }

    fn word(&mut self) -> &'a str {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest
            .find(|c: char| !(c.is_ascii_alphanumeric() || c == '_'))
            .unwrap_or(rest.len());
        self.pos += len;
        &rest[..len]
    }

    fn number(&mut self) -> Result<usize, ExprError> {
        let start = self.pos;
        let w = self.word();
        w.parse().or_else(|_| {
            self.pos = start;
            self.err(format!("expected a vertex count, found {w:?}"))
        })
    }

    fn expr(&mut self) -> Result<GraphExpr, ExprError> {
        let start = self.pos;
        let head = self.word();
        let op = match head {
            "path" | "cycle" | "complete" => {
                self.eat(':')?;
                let n = self.number()?;
                return Ok(match head {
                    "path" => GraphExpr::Path(n),
                    "cycle" => GraphExpr::Cycle(n),
                    _ => GraphExpr::Complete(n),
                });
            }
            "threesun" => return Ok(GraphExpr::ThreeSun),
            "file" => {
                self.eat(':')?;
                self.skip_ws();
                let rest = &self.src[self.pos..];
                let len = rest.find([',', ')']).unwrap_or(rest.len());
                let path = rest[..len].trim();
                if path.is_empty() {
                    return self.err("empty file path");
                }
                self.pos += len;
                return Ok(GraphExpr::File(PathBuf::from(path)));
            }
            "tensor" => Product::Tensor,
            "cartesian" => Product::Cartesian,
            "lex" => Product::Lex,
            other => {
                self.pos = start;
                return self.err(format!("unknown graph {other:?}"));
            }
        };
        self.eat('(')?;
        let a = self.expr()?;
        self.eat(',')?;
        let b = self.expr()?;
        self.eat(')')?;
        Ok(GraphExpr::Product(op, Box::new(a), Box::new(b)))
    }
}

impl GraphExpr {
    pub fn parse(src: &str) -> Result<GraphExpr, ExprError> {
        let mut p = Parser { src, pos: 0 };
        let e = p.expr()?;
        p.skip_ws();
        if p.pos != src.len() {
            return p.err("trailing input");
        }
        Ok(e)
    }

    pub fn build(&self) -> Result<Graph, ExprError> {
        Ok(match self {
            GraphExpr::Path(n) => Graph::path(*n),
            GraphExpr::Cycle(n) => Graph::cycle(*n)?,
            GraphExpr::Complete(n) => Graph::complete(*n),
            GraphExpr::ThreeSun => Graph::three_sun(),
            GraphExpr::File(p) => {
                let path = p.display().to_string();
                let text = std::fs::read_to_string(p).map_err(|source| ExprError::Io {
                    path: path.clone(),
                    source,
                })?;
                edgelist::parse(&text).map_err(|source| ExprError::EdgeList { path, source })?
            }
            GraphExpr::Product(op, a, b) => {
                let (a, b) = (a.build()?, b.build()?);
                match op {
                    Product::Tensor => Graph::tensor(&a, &b),
                    Product::Cartesian => Graph::cartesian(&a, &b),
                    Product::Lex => Graph::lexicographic(&a, &b),
                }
            }
        })
    }
}
