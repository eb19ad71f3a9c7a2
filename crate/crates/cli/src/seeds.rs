//! Seed lists: `1..20` (inclusive), `3,5,9`, or a mix such as `1..3,10`.

pub fn parse_seed_list(text: &str) -> Result<Vec<u64>, String> {
    let mut seeds = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        match part.split_once("..") {
            Some((lo, hi)) => {
                let lo: u64 = lo
                    .trim()
                    .parse()
                    .map_err(|_| format!("bad seed range {part:?}"))?;
                let hi = hi.trim().strip_prefix('=').unwrap_or(hi.trim());
                let hi: u64 = hi.parse().map_err(|_| format!("bad seed range {part:?}"))?;
                if lo > hi {
                    return Err(format!("empty seed range {part:?}"));
                }
                seeds.extend(lo..=hi);
            }
            None => seeds.push(part.parse().map_err(|_| format!("bad seed {part:?}"))?),
        }
    }
    Ok(seeds)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ranges_and_lists() {
        assert_eq!(parse_seed_list("1..4").unwrap(), vec![1, 2, 3, 4]);
        assert_eq!(parse_seed_list("1..=2, 7").unwrap(), vec![1, 2, 7]);
        assert_eq!(parse_seed_list("5").unwrap(), vec![5]);
        assert_eq!(parse_seed_list("").unwrap(), Vec::<u64>::new());
        assert_eq!(parse_seed_list("1..20").unwrap().len(), 20);
    }

    #[test]
    fn rejects_garbage() {
        assert!(parse_seed_list("a..3").is_err());
        assert!(parse_seed_list("4..1").is_err());
        assert!(parse_seed_list("-1").is_err());
    }
}
