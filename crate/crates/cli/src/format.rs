//! Text formats. Values travel between formats as trees, which hold giants
//! compactly; expanding to digits is gated by a bitsize cap.

use anyhow::{bail, Context, Result};
use clap::ValueEnum;

use giant::{view, BijDigits, Dag, RefNat, Tree};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Decimal digits.
    Dec,
    /// Tree text, e.g. `W (V T []) [T,T,T]`.
    Tree,
    /// Bijective base-2 digits over o/i, least significant first; `e` is zero.
    Bij,
    /// Graphviz DOT of the folded tree.
    Dot,
}

pub fn parse(format: Format, text: &str) -> Result<Tree> {
    let text = text.trim();
    match format {
        Format::Dec => {
            let n: RefNat = text
                .parse()
                .with_context(|| format!("invalid decimal {text:?}"))?;
            Ok(view(&n))
        }
        Format::Tree => Ok(text
            .parse()
            .with_context(|| format!("invalid tree {text:?}"))?),
        Format::Bij => {
            let b: BijDigits = text
                .parse()
                .with_context(|| format!("invalid bij digits {text:?}"))?;
            Ok(view(&b))
        }
        Format::Dot => bail!("dot is an output-only format"),
    }
}

/// Refuses digit expansion of values whose bitsize exceeds `max_bits`.
pub fn check_cap(x: &Tree, max_bits: u64) -> Result<()> {
    match x.bitsize_u64() {
        Some(bits) if bits <= max_bits => Ok(()),
        Some(bits) => bail!(
            "refusing to expand a value of bitsize {bits} (cap {max_bits}; raise with --max-bits)"
        ),
        None => bail!("refusing to expand a value whose bitsize does not fit in 64 bits"),
    }
}

pub fn render(format: Format, x: &Tree, max_bits: u64) -> Result<String> {
    Ok(match format {
        Format::Dec => {
            check_cap(x, max_bits)?;
            view::<Tree, RefNat>(x).to_string()
        }
        Format::Tree => x.to_string(),
        Format::Bij => {
            check_cap(x, max_bits)?;
            view::<Tree, BijDigits>(x).to_string()
        }
        Format::Dot => Dag::fold(x).to_dot().trim_end().to_string(),
    })
}
