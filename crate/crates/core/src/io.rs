//! Plain-text instance and solution formats.
//!
//! ```text
//! bqp01          # or bqp11 for the cut form
//! 2 2            # m n
//! 0              # c0
//! 1 -1           # c
//! 0 2            # d
//! 1 -2           # rows of Q
//! 3 0
//! ```
//!
//! Numbers are integers, decimals (`-2.5`) or fractions (`7/3`), all read
//! exactly. `#` starts a comment; blank lines are ignored.

use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::instance::{CutInstance, Instance, Solution};
use crate::matrix::Matrix;
use crate::rational::Rational;
use crate::transform::Qp01;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedInstance {
    Bqp01(Instance),
    Bqp11(CutInstance),
}

impl ParsedInstance {
    /// The coefficient data, whatever the variable domain.
    pub fn data(&self) -> &Instance {
        match self {
            ParsedInstance::Bqp01(inst) => inst,
            ParsedInstance::Bqp11(cut) => cut.data(),
        }
    }
}

struct Lines<'a> {
    rest: std::vec::IntoIter<(usize, Vec<&'a str>)>,
    last_line: usize,
}

impl<'a> Lines<'a> {
    fn new(text: &'a str) -> Self {
        let lines: Vec<(usize, Vec<&str>)> = text
            .lines()
            .enumerate()
            .map(|(k, l)| (k + 1, l.split('#').next().unwrap_or("").split_whitespace().collect::<Vec<_>>()))
            .filter(|(_, toks)| !toks.is_empty())
            .collect();
        Lines {
            rest: lines.into_iter(),
            last_line: 0,
        }
    }

    fn next(&mut self, what: &str) -> Result<(usize, Vec<&'a str>)> {
        match self.rest.next() {
            Some((line, toks)) => {
                self.last_line = line;
                Ok((line, toks))
            }
            None => Err(Error::Parse {
                line: self.last_line + 1,
                message: format!("unexpected end of input, expected {what}"),
            }),
        }
    }

    fn values(&mut self, what: &str, count: usize) -> Result<Vec<Rational>> {
        let (line, toks) = self.next(what)?;
        if toks.len() != count {
            return Err(Error::Parse {
                line,
                message: format!("{what} has {} values, expected {count}", toks.len()),
            });
        }
        toks.iter().map(|t| number(line, t)).collect()
    }

    fn finish(&mut self) -> Result<()> {
        match self.rest.next() {
            Some((line, _)) => Err(Error::Parse {
                line,
                message: "unexpected trailing data".into(),
            }),
            None => Ok(()),
        }
    }
}

fn number(line: usize, token: &str) -> Result<Rational> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("malformed number '{token}'"),
    })
}

fn count(line: usize, token: &str, what: &str) -> Result<usize> {
    match token.parse::<usize>() {
        Ok(v) if v >= 1 => Ok(v),
        _ => Err(Error::Parse {
            line,
            message: format!("{what} must be a positive integer, got '{token}'"),
        }),
    }
}

pub fn parse_instance(text: &str) -> Result<ParsedInstance> {
    let mut lines = Lines::new(text);
    let (line, header) = lines.next("header")?;
    let cut = match header.as_slice() {
        ["bqp01"] => false,
        ["bqp11"] => true,
        _ => {
            return Err(Error::Parse {
                line,
                message: format!("expected header 'bqp01' or 'bqp11', got '{}'", header.join(" ")),
            })
        }
    };
    let (line, dims) = lines.next("dimensions")?;
    let [m_tok, n_tok] = dims.as_slice() else {
        return Err(Error::Parse {
            line,
            message: "expected 'm n'".into(),
        });
    };
    let (m, n) = (count(line, m_tok, "m")?, count(line, n_tok, "n")?);
    let c0 = lines.values("c0", 1)?.remove(0);
    let c = lines.values("c", m)?;
    let d = lines.values("d", n)?;
    let rows = (0..m)
        .map(|i| lines.values(&format!("Q row {}", i + 1), n))
        .collect::<Result<Vec<_>>>()?;
    lines.finish()?;
    let q = Matrix::from_rows(rows)?;
    Ok(if cut {
        ParsedInstance::Bqp11(CutInstance::new(q, c, d, c0)?)
    } else {
        ParsedInstance::Bqp01(Instance::new(q, c, d, c0)?)
    })
}

/// Parses and requires the 0-1 form.
pub fn parse_bqp01(text: &str) -> Result<Instance> {
    match parse_instance(text)? {
        ParsedInstance::Bqp01(inst) => Ok(inst),
        ParsedInstance::Bqp11(_) => Err(Error::Parse {
            line: 1,
            message: "expected a bqp01 instance".into(),
        }),
    }
}

fn join(values: &[Rational]) -> String {
    values.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

fn body(header: &str, inst: &Instance) -> String {
    let mut s = format!("{header}\n{} {}\n{}\n{}\n{}\n", inst.m(), inst.n(), inst.c0(), join(inst.c()), join(inst.d()));
    for i in 0..inst.m() {
        let _ = writeln!(s, "{}", join(inst.q().row(i)));
    }
    s
}

pub fn format_instance(inst: &Instance) -> String {
    body("bqp01", inst)
}

pub fn format_cut_instance(cut: &CutInstance) -> String {
    body("bqp11", cut.data())
}

pub fn format_parsed(p: &ParsedInstance) -> String {
    match p {
        ParsedInstance::Bqp01(inst) => format_instance(inst),
        ParsedInstance::Bqp11(cut) => format_cut_instance(cut),
    }
}

/// `qp01`, `N`, `c0`, `c`, then `N` rows of the square matrix.
pub fn format_qp01(qp: &Qp01) -> String {
    let mut s = format!("qp01\n{}\n{}\n{}\n", qp.size(), qp.c0, join(&qp.c));
    for i in 0..qp.size() {
        let _ = writeln!(s, "{}", join(qp.q.row(i)));
    }
    s
}

pub fn bits(v: &[bool]) -> String {
    v.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

/// `value <exact> <decimal>`, then `x` and `y` bit strings.
pub fn format_solution(s: &Solution) -> String {
    format!(
        "value {} {:.6}\nx {}\ny {}\n",
        s.value,
        s.value.to_f64(),
        bits(&s.x),
        bits(&s.y)
    )
}

pub fn parse_solution(text: &str) -> Result<Solution> {
    let mut lines = Lines::new(text);
    let mut field = |name: &str| -> Result<(usize, Vec<&str>)> {
        let (line, toks) = lines.next(name)?;
        if toks.first() != Some(&name) {
            return Err(Error::Parse {
                line,
                message: format!("expected '{name}'"),
            });
        }
        Ok((line, toks[1..].to_vec()))
    };
    let (line, v) = field("value")?;
    let value = number(line, v.first().ok_or(Error::Parse { line, message: "missing value".into() })?)?;
    let mut bit_field = |name: &str| -> Result<Vec<bool>> {
        let (line, toks) = field(name)?;
        let raw = toks.concat();
        raw.chars()
            .map(|ch| match ch {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(Error::Parse {
                    line,
                    message: format!("bad bit '{ch}'"),
                }),
            })
            .collect()
    };
    let x = bit_field("x")?;
    let y = bit_field("y")?;
    Ok(Solution { x, y, value })
}
