use std::fmt;

use hsstable::Subset;

/// A malformed flag value; reported with exit status 2.
#[derive(Debug)]
pub struct Usage(pub String);

impl fmt::Display for Usage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for Usage {}

/// `"0,3,5"` as a subset of `{0..order}`; the empty string is `∅`.
pub fn parse_set(text: &str, order: usize) -> Result<Subset, Usage> {
    let mut out = Subset::empty(order);
    for item in text.split(',').map(str::trim).filter(|t| !t.is_empty()) {
        let i: usize = item
            .parse()
            .map_err(|_| Usage(format!("{item:?} is not an element index")))?;
        if i >= order {
            return Err(Usage(format!("element {i} out of range for order {order}")));
        }
        out.insert(i);
    }
    Ok(out)
}

/// `"0,1;2,3"` as a list of subsets.
pub fn parse_sets(text: &str, order: usize) -> Result<Vec<Subset>, Usage> {
    if text.trim().is_empty() {
        return Err(Usage("no sets given".into()));
    }
    text.split(';').map(|part| parse_set(part, order)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sets() {
        assert_eq!(parse_set("", 4).unwrap(), Subset::empty(4));
        assert_eq!(parse_set(" 2, 0 ", 4).unwrap().to_vec(), vec![0, 2]);
        assert!(parse_set("4", 4).is_err());
        assert!(parse_set("x", 4).is_err());
        let v = parse_sets("0,1;2;3", 4).unwrap();
        assert_eq!(v.len(), 3);
        assert_eq!(v[1].to_vec(), vec![2]);
        assert!(parse_sets("", 4).is_err());
    }
}
