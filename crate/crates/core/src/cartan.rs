//! Cartan data of the simple Lie algebras in Bourbaki numbering.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Family::A),
            "B" => Ok(Family::B),
            "C" => Ok(Family::C),
            "D" => Ok(Family::D),
            "E" => Ok(Family::E),
            "F" => Ok(Family::F),
            "G" => Ok(Family::G),
            _ => Err(Error::Parse(format!("unknown Lie type family {s:?}"))),
        }
    }
}

/// Cartan matrix together with the constants attached to a simple type.
///
/// `cartan[i][j] = a_ij = 2(α_i, α_j)/(α_i, α_i)`, normalised so that
/// short roots have `(α, α) = 2`, hence `d_i = (α_i, α_i)/2`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CartanDatum {
    pub family: Family,
    pub rank: usize,
    pub cartan: Vec<Vec<i64>>,
    pub symmetrizers: Vec<i64>,
    /// `2κ = m·h∨` where `m` is the lacing number.
    pub two_kappa: i64,
    pub dual_coxeter: i64,
    /// The involution `i ↦ i*` with `α_{i*} = −w0(α_i)`.
    pub star: Vec<usize>,
    pub simply_laced: bool,
}

/// Every type covered by the sweep tests, up to the given rank bound for the
/// classical families.
pub fn catalog(max_rank: usize) -> Vec<(Family, usize)> {
    let mut out = Vec::new();
    for r in 1..=max_rank {
        out.push((Family::A, r));
    }
    for r in 2..=max_rank {
        out.push((Family::B, r));
    }
    for r in 2..=max_rank {
        out.push((Family::C, r));
    }
    for r in 4..=max_rank {
        out.push((Family::D, r));
    }
    for r in [6, 7, 8] {
        out.push((Family::E, r));
    }
    out.push((Family::F, 4));
    out.push((Family::G, 2));
    out
}

/// Rank bound for sweeps, read from `YP_CATALOG_MAX_RANK` (default 8).
pub fn catalog_max_rank() -> usize {
    std::env::var("YP_CATALOG_MAX_RANK")
        .ok()
        .and_then(|s| s.trim().parse().ok())
        .filter(|&r: &usize| r >= 1)
        .unwrap_or(8)
}

impl CartanDatum {
    pub fn new(family: Family, rank: usize) -> Result<Self> {
        let r = rank;
        let valid = match family {
            Family::A => r >= 1,
            Family::B | Family::C => r >= 2,
            Family::D => r >= 4,
            Family::E => (6..=8).contains(&r),
            Family::F => r == 4,
            Family::G => r == 2,
        };
        if !valid {
            return Err(Error::InvalidType { family: family.letter(), rank });
        }

        // Symmetric form (α_i, α_j) on simple roots, 0-based nodes.
        let mut s = vec![vec![0i64; r]; r];
        let mut link = |i: usize, j: usize, v: i64| {
            s[i][j] = v;
            s[j][i] = v;
        };
        let mut norms = vec![2i64; r];
        match family {
            Family::A => {
                for i in 0..r - 1 {
                    link(i, i + 1, -1);
                }
            }
            Family::B => {
                for n in norms.iter_mut().take(r - 1) {
                    *n = 4;
                }
                for i in 0..r - 1 {
                    link(i, i + 1, -2);
                }
            }
            Family::C => {
                norms[r - 1] = 4;
                for i in 0..r - 2 {
                    link(i, i + 1, -1);
                }
                link(r - 2, r - 1, -2);
            }
            Family::D => {
                for i in 0..r - 2 {
                    link(i, i + 1, -1);
                }
                link(r - 3, r - 1, -1);
            }
            Family::E => {
                link(0, 2, -1);
                link(1, 3, -1);
                for i in 2..r - 1 {
                    link(i, i + 1, -1);
                }
            }
            Family::F => {
                norms[0] = 4;
                norms[1] = 4;
                link(0, 1, -2);
                link(1, 2, -2);
                link(2, 3, -1);
            }
            Family::G => {
                norms[1] = 6;
                link(0, 1, -3);
            }
        }
        for i in 0..r {
            s[i][i] = norms[i];
        }
        let cartan: Vec<Vec<i64>> =
            (0..r).map(|i| (0..r).map(|j| 2 * s[i][j] / s[i][i]).collect()).collect();
        let symmetrizers: Vec<i64> = norms.iter().map(|n| n / 2).collect();

        let ri = r as i64;
        let (dual_coxeter, lacing) = match family {
            Family::A => (ri + 1, 1),
            Family::B => (2 * ri - 1, 2),
            Family::C => (ri + 1, 2),
            Family::D => (2 * ri - 2, 1),
            Family::E => (
                match r {
                    6 => 12,
                    7 => 18,
                    _ => 30,
                },
                1,
            ),
            Family::F => (9, 2),
            Family::G => (4, 3),
        };

        let mut star: Vec<usize> = (0..r).collect();
        match family {
            Family::A => {
                for (i, st) in star.iter_mut().enumerate() {
                    *st = r - 1 - i;
                }
            }
            Family::D if r % 2 == 1 => star.swap(r - 2, r - 1),
            Family::E if r == 6 => {
                star.swap(0, 5);
                star.swap(2, 4);
            }
            _ => {}
        }

        Ok(CartanDatum {
            family,
            rank,
            cartan,
            symmetrizers,
            two_kappa: lacing * dual_coxeter,
            dual_coxeter,
            star,
            simply_laced: lacing == 1,
        })
    }

    /// Parses names like `A3`, `e8`, `G2`.
    pub fn from_name(name: &str) -> Result<Self> {
        let name = name.trim();
        let mut chars = name.chars();
        let family: Family = chars
            .next()
            .ok_or_else(|| Error::Parse("empty type name".into()))?
            .to_string()
            .parse()?;
        let rank: usize = chars
            .as_str()
            .parse()
            .map_err(|_| Error::Parse(format!("bad type name {name:?}")))?;
        Self::new(family, rank)
    }

    pub fn name(&self) -> String {
        format!("{}{}", self.family, self.rank)
    }

    pub fn d(&self, i: usize) -> i64 {
        self.symmetrizers[i]
    }

    pub fn a(&self, i: usize, j: usize) -> i64 {
        self.cartan[i][j]
    }

    /// `d_i a_ij = (α_i, α_j)/2`.
    pub fn sym(&self, i: usize, j: usize) -> i64 {
        self.symmetrizers[i] * self.cartan[i][j]
    }

    pub fn nodes(&self) -> std::ops::Range<usize> {
        0..self.rank
    }

    /// Bourbaki neighbours of node `i`.
    pub fn neighbours(&self, i: usize) -> impl Iterator<Item = usize> + '_ {
        self.nodes().filter(move |&j| j != i && self.cartan[i][j] != 0)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let a2 = CartanDatum::new(Family::A, 2).unwrap();
        assert_eq!(a2.two_kappa, 3);
        assert_eq!(a2.symmetrizers, vec![1, 1]);
        assert_eq!(a2.star, vec![1, 0]);

        let g2 = CartanDatum::new(Family::G, 2).unwrap();
        assert_eq!(g2.two_kappa, 12);
        assert_eq!(g2.cartan, vec![vec![2, -3], vec![-1, 2]]);

        let d4 = CartanDatum::new(Family::D, 4).unwrap();
        assert_eq!(d4.two_kappa, 6);
        assert_eq!(d4.star, vec![0, 1, 2, 3]);

        let b2 = CartanDatum::new(Family::B, 2).unwrap();
        assert_eq!(b2.symmetrizers, vec![2, 1]);
        assert_eq!(b2.cartan, vec![vec![2, -1], vec![-2, 2]]);
        assert_eq!(b2.two_kappa, 6);
    }

    #[test]
    fn bourbaki_shapes() {
        let c3 = CartanDatum::new(Family::C, 3).unwrap();
        assert_eq!(c3.cartan, vec![vec![2, -1, 0], vec![-1, 2, -2], vec![0, -1, 2]]);
        let f4 = CartanDatum::new(Family::F, 4).unwrap();
        assert_eq!(f4.cartan[1][2], -1);
        assert_eq!(f4.cartan[2][1], -2);
        let e6 = CartanDatum::new(Family::E, 6).unwrap();
        assert_eq!(e6.neighbours(3).collect::<Vec<_>>(), vec![1, 2, 4]);
    }

    #[test]
    fn rejects_invalid_types() {
        for (f, r) in [(Family::A, 0), (Family::B, 1), (Family::D, 3), (Family::E, 9), (Family::G, 3)] {
            assert!(matches!(CartanDatum::new(f, r), Err(Error::InvalidType { .. })));
        }
        assert!(CartanDatum::from_name("Q3").is_err());
        assert_eq!(CartanDatum::from_name("e7").unwrap().rank, 7);
    }

    #[test]
    fn invariants_on_catalog() {
        for (f, r) in catalog(8) {
            let c = CartanDatum::new(f, r).unwrap();
            for i in c.nodes() {
                assert_eq!(c.a(i, i), 2);
                assert_eq!(c.star[c.star[i]], i);
                assert_eq!(c.d(c.star[i]), c.d(i));
                for j in c.nodes() {
                    assert_eq!(c.sym(i, j), c.sym(j, i), "{}", c.name());
                    if i != j {
                        assert!(c.a(i, j) <= 0);
                    }
                }
            }
            if c.simply_laced {
                assert!(c.symmetrizers.iter().all(|&d| d == 1));
                assert_eq!(c.two_kappa, c.dual_coxeter);
            }
        }
    }
}
