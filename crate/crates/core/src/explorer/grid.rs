//! Grid syntax: `n=1..8,a=0..n,r=0..2,j=0..2r+1`.
//!
//! Axes are evaluated left to right; a bound may reference any earlier axis.
//! Bound expressions support integers, names, `+ - *`, parentheses, unary
//! minus and implicit multiplication (`2r`, `2(m+1)`).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::verifier::Params;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Expr {
    Int(i64),
    Var(String),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
}

impl Expr {
    fn eval(&self, env: &BTreeMap<String, i64>) -> Result<i64> {
        let overflow = || Error::Grid("bound overflows i64".into());
        Ok(match self {
            Expr::Int(v) => *v,
            Expr::Var(name) => *env.get(name).ok_or_else(|| Error::Grid(format!("unbound name {name:?}")))?,
            Expr::Neg(e) => e.eval(env)?.checked_neg().ok_or_else(overflow)?,
            Expr::Add(a, b) => a.eval(env)?.checked_add(b.eval(env)?).ok_or_else(overflow)?,
            Expr::Sub(a, b) => a.eval(env)?.checked_sub(b.eval(env)?).ok_or_else(overflow)?,
            Expr::Mul(a, b) => a.eval(env)?.checked_mul(b.eval(env)?).ok_or_else(overflow)?,
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Int(i64),
    Name(String),
    Op(char),
}

fn lex(s: &str) -> Result<Vec<Tok>> {
    let chars: Vec<char> = s.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            let text: String = chars[start..i].iter().collect();
            out.push(Tok::Int(text.parse().map_err(|_| Error::Grid(format!("integer {text} out of range")))?));
        } else if c.is_ascii_alphabetic() || c == '_' {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Tok::Name(chars[start..i].iter().collect()));
        } else if "+-*()".contains(c) {
            out.push(Tok::Op(c));
            i += 1;
        } else {
            return Err(Error::Grid(format!("unexpected character {c:?} in {s:?}")));
        }
    }
    Ok(out)
}

struct Parser {
    toks: Vec<Tok>,
    pos: usize,
}

impl Parser {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn eat(&mut self, op: char) -> bool {
        if self.peek() == Some(&Tok::Op(op)) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.term()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.term()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.term()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn term(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            let implicit = matches!(self.peek(), Some(Tok::Name(_)) | Some(Tok::Op('(')));
            if self.eat('*') || implicit {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        match self.toks.get(self.pos).cloned() {
            Some(Tok::Int(v)) => {
                self.pos += 1;
                Ok(Expr::Int(v))
            }
            Some(Tok::Name(n)) => {
                self.pos += 1;
                Ok(Expr::Var(n))
            }
            Some(Tok::Op('(')) => {
                self.pos += 1;
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(Error::Grid("missing ')'".into()));
                }
                Ok(e)
            }
            other => Err(Error::Grid(format!("expected a value, found {other:?}"))),
        }
    }
}

fn parse_expr(s: &str) -> Result<Expr> {
    let mut p = Parser { toks: lex(s)?, pos: 0 };
    if p.toks.is_empty() {
        return Err(Error::Grid("empty bound".into()));
    }
    let e = p.expr()?;
    if p.pos != p.toks.len() {
        return Err(Error::Grid(format!("trailing input in bound {s:?}")));
    }
    Ok(e)
}

/// One named axis with inclusive bounds.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Axis {
    pub name: String,
    lo: Expr,
    hi: Expr,
    text: String,
}

/// An ordered list of axes.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Grid {
    axes: Vec<Axis>,
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    chars.next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl FromStr for Grid {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut axes: Vec<Axis> = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (name, range) = part
                .split_once('=')
                .ok_or_else(|| Error::Grid(format!("axis {part:?} is not of the form name=lo..hi")))?;
            let name = name.trim();
            if !is_name(name) {
                return Err(Error::Grid(format!("invalid axis name {name:?}")));
            }
            if axes.iter().any(|a| a.name == name) {
                return Err(Error::Grid(format!("axis {name} given twice")));
            }
            let (lo, hi) = match range.split_once("..") {
                Some((lo, hi)) => (parse_expr(lo)?, parse_expr(hi)?),
                None => {
                    let v = parse_expr(range)?;
                    (v.clone(), v)
                }
            };
            axes.push(Axis { name: name.to_string(), lo, hi, text: part.to_string() });
        }
        Ok(Grid { axes })
    }
}

impl fmt::Display for Grid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<&str> = self.axes.iter().map(|a| a.text.as_str()).collect();
        f.write_str(&parts.join(","))
    }
}

impl Grid {
    pub fn axes(&self) -> &[Axis] {
        &self.axes
    }

    pub fn has_axis(&self, name: &str) -> bool {
        self.axes.iter().any(|a| a.name == name)
    }

    /// Appends an axis parsed from `name=lo..hi`.
    pub fn push(&mut self, axis: &str) -> Result<()> {
        let extra: Grid = axis.parse()?;
        for a in extra.axes {
            if self.has_axis(&a.name) {
                return Err(Error::Grid(format!("axis {} given twice", a.name)));
            }
            self.axes.push(a);
        }
        Ok(())
    }

    /// All points in lexicographic order, starting from the bindings in `env`.
    pub fn points_with(&self, env: BTreeMap<String, i64>) -> Result<Vec<Vec<(String, i64)>>> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        self.walk(0, &mut env.clone(), &mut current, &mut out)?;
        Ok(out)
    }

    pub fn points(&self) -> Result<Vec<Vec<(String, i64)>>> {
        self.points_with(BTreeMap::new())
    }

    fn walk(
        &self,
        depth: usize,
        env: &mut BTreeMap<String, i64>,
        current: &mut Vec<(String, i64)>,
        out: &mut Vec<Vec<(String, i64)>>,
    ) -> Result<()> {
        let Some(axis) = self.axes.get(depth) else {
            out.push(current.clone());
            return Ok(());
        };
        let (lo, hi) = (axis.lo.eval(env)?, axis.hi.eval(env)?);
        let shadowed = env.get(&axis.name).copied();
        for v in lo..=hi {
            env.insert(axis.name.clone(), v);
            current.push((axis.name.clone(), v));
            self.walk(depth + 1, env, current, out)?;
            current.pop();
        }
        match shadowed {
            Some(v) => env.insert(axis.name.clone(), v),
            None => env.remove(&axis.name),
        };
        Ok(())
    }
}

/// Index of a multi-index axis name `n<i>`, `i >= 1`.
pub(crate) fn n_index(name: &str) -> Option<i64> {
    name.strip_prefix('n')?.parse::<i64>().ok().filter(|&i| i >= 1)
}

/// Grid points turned into check parameters. For multi-index checks the
/// axes `n<i>` with `i > m` are pinned to their lower bound (other values are
/// skipped) and dropped, and `m` defaults to the number of `n<i>` axes.
pub(crate) fn grid_params(grid: &Grid, multi_index: bool) -> Result<Vec<Params>> {
    let mut env = BTreeMap::new();
    let implicit_m = multi_index && !grid.has_axis("m");
    if implicit_m {
        let count = grid.axes.iter().filter(|a| n_index(&a.name).is_some()).count();
        env.insert("m".to_string(), count as i64);
    }
    let mut out = Vec::new();
    'points: for point in grid.points_with(env.clone())? {
        if !multi_index {
            out.push(point.into_iter().collect());
            continue;
        }
        let m = point.iter().find(|(n, _)| n == "m").map(|(_, v)| *v).unwrap_or_else(|| env["m"]);
        let mut params = Params::new();
        let mut local = env.clone();
        for (name, v) in &point {
            match n_index(name) {
                Some(i) if i > m => {
                    let axis = grid.axes.iter().find(|a| &a.name == name).expect("axis exists");
                    if *v != axis.lo.eval(&local)? {
                        continue 'points;
                    }
                }
                _ => params.set(name, *v),
            }
            local.insert(name.clone(), *v);
        }
        if implicit_m {
            params.set("m", m);
        }
        out.push(canonical_order(&params, m));
    }
    Ok(out)
}

/// `a, m, n1..nm, r, j` first, anything else after in its original order.
fn canonical_order(params: &Params, m: i64) -> Params {
    let mut names: Vec<String> = vec!["a".into(), "m".into()];
    names.extend((1..=m).map(|i| format!("n{i}")));
    names.extend(["r".into(), "j".into()]);
    let mut out = Params::new();
    for name in &names {
        if let Some(v) = params.get(name) {
            out.set(name, v);
        }
    }
    for (name, v) in params.iter() {
        if out.get(name).is_none() {
            out.set(name, v);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eval(s: &str, env: &[(&str, i64)]) -> i64 {
        let env = env.iter().map(|(k, v)| (k.to_string(), *v)).collect();
        parse_expr(s).unwrap().eval(&env).unwrap()
    }

    #[test]
    fn expressions() {
        assert_eq!(eval("2r+1", &[("r", 3)]), 7);
        assert_eq!(eval("-2m-2", &[("m", 2)]), -6);
        assert_eq!(eval("2(m+1)*3", &[("m", 1)]), 12);
        assert_eq!(eval("n-a", &[("n", 5), ("a", 2)]), 3);
        assert!(parse_expr("2+").is_err());
        assert!(parse_expr("r)").is_err());
    }

    #[test]
    fn triangular_grid() {
        let grid: Grid = "n=1..3,a=0..n".parse().unwrap();
        let pts = grid.points().unwrap();
        assert_eq!(pts.len(), 2 + 3 + 4);
        assert_eq!(pts[0], vec![("n".to_string(), 1), ("a".to_string(), 0)]);
        assert_eq!(pts.last().unwrap(), &vec![("n".to_string(), 3), ("a".to_string(), 3)]);
        let grid: Grid = "n=1..8,a=0..n,r=0..2,j=0..2r+1".parse().unwrap();
        assert_eq!(grid.points().unwrap().len(), 44 * (2 + 4 + 6));
    }

    #[test]
    fn empty_and_invalid() {
        let grid: Grid = "n=3..1".parse().unwrap();
        assert!(grid.points().unwrap().is_empty());
        assert!("n".parse::<Grid>().is_err());
        assert!("n=1..2,n=1..2".parse::<Grid>().is_err());
        assert!("a=0..n".parse::<Grid>().unwrap().points().is_err());
        assert_eq!("n=4".parse::<Grid>().unwrap().points().unwrap().len(), 1);
    }

    #[test]
    fn multi_index_pinning() {
        let grid: Grid = "m=1..2,n1=1..2,n2=1..2,a=0..0,r=0..0,j=0..m".parse().unwrap();
        let params = grid_params(&grid, true).unwrap();
        // m = 1: two choices of n1, n2 pinned, j in 0..1; m = 2: four pairs, j in 0..2.
        assert_eq!(params.len(), 2 * 2 + 4 * 3);
        assert_eq!(params[0].to_string(), "a=0;m=1;n1=1;r=0;j=0");
        let implicit: Grid = "n1=1..2,n2=1,a=0,r=0,j=0..m".parse().unwrap();
        let params = grid_params(&implicit, true).unwrap();
        assert_eq!(params.len(), 2 * 3);
        assert_eq!(params[0].get("m"), Some(2));
    }
}
