//! Command handlers. Each returns the text to print.

use anyhow::{bail, Context, Result};
use clap::ValueEnum;

use giant::codecs::{
    from_list, from_mset, from_set, l_and, l_dif, l_ite, l_not, l_or, l_xor, to_list, to_mset,
    to_set,
};
use giant::numtheory::{self, SpecialNumbers};
use giant::sweep;
use giant::{view, BijDigits, Dag, Nat, RefNat, Tree};

use crate::format::{self, Format};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Special {
    Mersenne,
    Fermat,
    Perfect,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SpecialOutput {
    Dec,
    Tree,
    Bitsize,
    Dot,
    /// Node count of the folded DAG.
    Nodes,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Collection {
    List,
    Mset,
    Set,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum BitOp {
    And,
    Or,
    Xor,
    Dif,
    Ite,
    Not,
}

pub fn convert(from: Format, to: Format, value: &str, max_bits: u64) -> Result<String> {
    format::render(to, &format::parse(from, value)?, max_bits)
}

fn bitsize_text(x: &Tree) -> String {
    match x.bitsize_u64() {
        Some(b) => b.to_string(),
        None => view::<Tree, RefNat>(&x.bitsize()).to_string(),
    }
}

pub fn special(kind: Special, p: &str, output: SpecialOutput, max_bits: u64) -> Result<String> {
    let p = format::parse(Format::Dec, p)?;
    let x = match kind {
        Special::Mersenne => Tree::mersenne(&p),
        Special::Fermat => Tree::fermat(&p),
        Special::Perfect => Tree::perfect(&p)?,
    };
    match output {
        SpecialOutput::Dec => format::render(Format::Dec, &x, max_bits),
        SpecialOutput::Tree => format::render(Format::Tree, &x, max_bits),
        SpecialOutput::Dot => format::render(Format::Dot, &x, max_bits),
        SpecialOutput::Bitsize => Ok(bitsize_text(&x)),
        SpecialOutput::Nodes => Ok(Dag::fold(&x).node_count().to_string()),
    }
}

fn parse_elements(text: &str) -> Result<Vec<Tree>> {
    let text = text.trim();
    if text.is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|e| format::parse(Format::Dec, e))
        .collect()
}

fn join(xs: &[Tree], max_bits: u64) -> Result<String> {
    let parts: Result<Vec<String>> = xs
        .iter()
        .map(|x| format::render(Format::Dec, x, max_bits))
        .collect();
    Ok(parts?.join(","))
}

pub fn encode(view: Collection, elements: &str, rep: Format, max_bits: u64) -> Result<String> {
    let xs = parse_elements(elements)?;
    let x = match view {
        Collection::List => from_list(&xs),
        Collection::Mset => from_mset(&xs).context("multiset elements must be non-decreasing")?,
        Collection::Set => from_set(&xs).context("set elements must be strictly ascending")?,
    };
    format::render(rep, &x, max_bits)
}

pub fn decode(view: Collection, value: &str, rep: Format, max_bits: u64) -> Result<String> {
    let x = format::parse(rep, value)?;
    let xs = match view {
        Collection::List => to_list(&x),
        Collection::Mset => to_mset(&x),
        Collection::Set => to_set(&x),
    };
    join(&xs, max_bits)
}

pub fn bits(
    op: BitOp,
    args: &[String],
    bitlen: Option<u64>,
    fmt: Format,
    max_bits: u64,
) -> Result<String> {
    let xs: Vec<Tree> = args
        .iter()
        .map(|a| format::parse(fmt, a))
        .collect::<Result<_>>()?;
    let arity = match op {
        BitOp::Not => 1,
        BitOp::Ite => 3,
        _ => 2,
    };
    if xs.len() != arity {
        bail!("{op:?} takes {arity} operand(s), got {}", xs.len());
    }
    let out = match op {
        BitOp::And => l_and(&xs[0], &xs[1]),
        BitOp::Or => l_or(&xs[0], &xs[1]),
        BitOp::Xor => l_xor(&xs[0], &xs[1]),
        BitOp::Dif => l_dif(&xs[0], &xs[1]),
        BitOp::Ite => l_ite(&xs[0], &xs[1], &xs[2]),
        BitOp::Not => {
            let l = bitlen.context("not needs --bitlen")?;
            l_not(l, &xs[0])?
        }
    };
    format::render(fmt, &out, max_bits)
}

pub fn dot(value: &str, from: Format) -> Result<String> {
    format::render(Format::Dot, &format::parse(from, value)?, 0)
}

pub fn nsyr(n: &str) -> Result<String> {
    let x = format::parse(Format::Dec, n)?;
    join(&numtheory::nsyr(&x), u64::MAX)
}

pub fn primes(k: usize) -> String {
    let ps: Vec<String> = numtheory::primes::<RefNat>()
        .take(k)
        .map(|p| p.to_string())
        .collect();
    ps.join(",")
}

pub fn ack(m: &str, x: &str) -> Result<String> {
    let (m, x): (RefNat, RefNat) = (m.parse()?, x.parse()?);
    if m > RefNat::from(3) {
        bail!("ack is limited to m <= 3");
    }
    Ok(numtheory::ack(&m, &x).to_string())
}

/// Oracle sweep of the three representations over `0..=bound`.
pub fn verify(bound: u64) -> Result<String> {
    let mut lines = Vec::new();
    let mut bad = 0;
    for (name, misses) in [
        ("tree", sweep::cross_check::<Tree>(bound)),
        ("bij", sweep::cross_check::<BijDigits>(bound)),
        ("dec", sweep::cross_check::<RefNat>(bound)),
    ] {
        bad += misses.len();
        match misses.first() {
            None => lines.push(format!("{name} ok")),
            Some(m) => lines.push(format!(
                "{name} {} mismatches, first {} {} {}",
                misses.len(),
                m.op,
                m.x,
                m.y
            )),
        }
    }
    if bad > 0 {
        bail!("{}", lines.join("; "));
    }
    Ok(lines.join("\n"))
}
