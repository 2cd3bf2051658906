use hexad::lattice::{Element, LatticeDescriptor};
use hexad::search::Carrier;
use hexad::{Error, Lattice, Result};

/// `a,y,b` as three naturals.
pub fn parse_triple(s: &str) -> std::result::Result<[u64; 3], String> {
    let parts: Vec<&str> = s.split(',').collect();
    let [a, y, b] = parts.as_slice() else {
        return Err(format!("expected three comma-separated numbers, got `{s}`"));
    };
    let num = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|e| format!("`{}`: {e}", t.trim()))
    };
    Ok([num(a)?, num(y)?, num(b)?])
}

/// A list of naturals given on the command line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Values(pub Vec<u64>);

pub fn parse_values_arg(s: &str) -> std::result::Result<Values, String> {
    parse_values(s).map(Values)
}

/// `LO..HI` (inclusive) or an explicit list `v1,v2,...`.
pub fn parse_values(s: &str) -> std::result::Result<Vec<u64>, String> {
    let num = |t: &str| {
        t.trim()
            .parse::<u64>()
            .map_err(|e| format!("`{}`: {e}", t.trim()))
    };
    if let Some((lo, hi)) = s.split_once("..") {
        let hi = hi.strip_prefix('=').unwrap_or(hi);
        let (lo, hi) = (num(lo)?, num(hi)?);
        if lo > hi {
            return Err(format!("empty range `{s}`"));
        }
        if hi - lo >= 1 << 20 {
            return Err(format!("range `{s}` is too long"));
        }
        Ok((lo..=hi).collect())
    } else {
        s.split(',').map(num).collect()
    }
}

/// Splits on commas outside braces and parentheses, so `{0,1},{2},{}` has
/// three items.
pub fn split_items(s: &str) -> Vec<String> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut cur = String::new();
    for ch in s.chars() {
        match ch {
            '{' | '(' | '[' => depth += 1,
            '}' | ')' | ']' => depth -= 1,
            ',' if depth == 0 => {
                out.push(std::mem::take(&mut cur).trim().to_string());
                continue;
            }
            _ => {}
        }
        cur.push(ch);
    }
    out.push(cur.trim().to_string());
    out
}

pub fn parse_elements<const K: usize>(lat: &LatticeDescriptor, s: &str) -> Result<[Element; K]> {
    let items = split_items(s);
    if items.len() != K {
        return Err(Error::InvalidSpec(format!(
            "expected {K} elements of {}, got `{s}`",
            lat.name()
        )));
    }
    let parsed = items
        .iter()
        .map(|t| lat.parse_element(t))
        .collect::<Result<Vec<_>>>()?;
    Ok(parsed.try_into().expect("length checked"))
}

/// The whole lattice when finite, otherwise the given window of an
/// integer-valued backend.
pub fn carrier(lat: &LatticeDescriptor, window: Option<&[u64]>) -> Result<Carrier<Element>> {
    if lat.is_finite() {
        return Ok(Carrier::listed(lat.enumerate()?));
    }
    let window = window.ok_or_else(|| {
        Error::InvalidSpec(format!("{} is infinite; pass --window LO..HI", lat.name()))
    })?;
    let items = window
        .iter()
        .map(|&v| match lat {
            LatticeDescriptor::Arithmetic(_) => Ok(Element::Natural(v)),
            LatticeDescriptor::Chain(_) => Ok(Element::Integer(v as i64)),
            _ => Err(Error::InvalidSpec(format!(
                "--window is not supported for {}",
                lat.name()
            ))),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(Carrier::listed(items))
}
