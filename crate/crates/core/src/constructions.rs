//! Builders for the semigroup families used as examples and counterexamples.
//!
//! Every builder goes through [`InvolutionSemigroup::validate`], so its output
//! is a checked involution semigroup.

use std::collections::BTreeSet;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::semigroup::{Element, InvolutionSemigroup};
use crate::subset::Subset;

fn build(
    table: Vec<Vec<Element>>,
    star: Vec<Element>,
    names: Vec<String>,
    name: String,
) -> InvolutionSemigroup {
    InvolutionSemigroup::validate(table, star, Some(names))
        .expect("builder produced an invalid involution semigroup")
        .with_name(name)
}

fn from_fn(
    n: usize,
    mult: impl Fn(usize, usize) -> usize,
    star: impl Fn(usize) -> usize,
    names: Vec<String>,
    name: String,
) -> InvolutionSemigroup {
    let table = (0..n)
        .map(|a| (0..n).map(|b| mult(a, b)).collect())
        .collect();
    build(table, (0..n).map(star).collect(), names, name)
}

/// Cycle notation with 1-based points, `e` for the identity.
pub fn cycle_notation(perm: &[usize]) -> String {
    let n = perm.len();
    let mut seen = vec![false; n];
    let sep = if n >= 10 { "," } else { "" };
    let mut out = String::new();
    for start in 0..n {
        if seen[start] || perm[start] == start {
            continue;
        }
        let mut cycle = Vec::new();
        let mut i = start;
        while !seen[i] {
            seen[i] = true;
            cycle.push((i + 1).to_string());
            i = perm[i];
        }
        out.push('(');
        out.push_str(&cycle.join(sep));
        out.push(')');
    }
    if out.is_empty() {
        "e".into()
    } else {
        out
    }
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for i in 0..used.len() {
            if !used[i] {
                used[i] = true;
                prefix.push(i);
                rec(prefix, used, out);
                prefix.pop();
                used[i] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

/// The symmetric group with its permutations, listed in lexicographic order
/// of one-line notation (so index 0 is the identity).
#[derive(Debug, Clone)]
pub struct SymmetricGroup {
    pub semigroup: InvolutionSemigroup,
    pub perms: Vec<Vec<usize>>,
}

impl SymmetricGroup {
    pub fn degree(&self) -> usize {
        self.perms[0].len()
    }

    pub fn identity(&self) -> Element {
        0
    }

    /// Index of a permutation given in 0-based one-line notation.
    pub fn index_of(&self, perm: &[usize]) -> Element {
        self.perms
            .binary_search_by(|p| p.as_slice().cmp(perm))
            .expect("not a permutation of the right degree")
    }

    /// Index of a product of cycles given with 1-based points, e.g.
    /// `&[&[1, 2, 3]]` for `(123)`.
    pub fn index_of_cycles(&self, cycles: &[&[usize]]) -> Element {
        let mut perm: Vec<usize> = (0..self.degree()).collect();
        for cycle in cycles.iter().rev() {
            let mut c: Vec<usize> = (0..self.degree()).collect();
            for k in 0..cycle.len() {
                c[cycle[k] - 1] = cycle[(k + 1) % cycle.len()] - 1;
            }
            perm = perm.iter().map(|&i| c[i]).collect();
        }
        self.index_of(&perm)
    }

    pub fn is_even(&self, g: Element) -> bool {
        let p = &self.perms[g];
        let inversions = (0..p.len())
            .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count();
        inversions % 2 == 0
    }

    pub fn subset<I: IntoIterator<Item = Element>>(&self, items: I) -> Result<Subset> {
        self.semigroup.subset(items)
    }
}

/// `S_n` with inversion as involution and `(στ)(i) = σ(τ(i))`.
pub fn symmetric_group(n: usize) -> SymmetricGroup {
    assert!(n >= 1, "degree must be positive");
    let perms = permutations(n);
    let index = |p: &[usize]| perms.binary_search_by(|q| q.as_slice().cmp(p)).unwrap();
    let table = perms
        .iter()
        .map(|s| {
            perms
                .iter()
                .map(|t| index(&t.iter().map(|&i| s[i]).collect::<Vec<_>>()))
                .collect()
        })
        .collect();
    let star = perms
        .iter()
        .map(|s| {
            let mut inv = vec![0; n];
            for (i, &si) in s.iter().enumerate() {
                inv[si] = i;
            }
            index(&inv)
        })
        .collect();
    let names = perms.iter().map(|p| cycle_notation(p)).collect();
    let semigroup = build(table, star, names, format!("S{n}"));
    SymmetricGroup { semigroup, perms }
}

/// `ℤ_n` under addition with negation as involution.
pub fn cyclic_group(n: usize) -> InvolutionSemigroup {
    assert!(n >= 1);
    from_fn(
        n,
        |a, b| (a + b) % n,
        |a| (n - a) % n,
        (0..n).map(|a| a.to_string()).collect(),
        format!("Z{n}"),
    )
}

/// The same semigroup with the identity map as involution; only valid for
/// commutative semigroups.
pub fn with_trivial_involution(s: &InvolutionSemigroup) -> Result<InvolutionSemigroup> {
    let names = s.names().map(<[String]>::to_vec);
    let out = InvolutionSemigroup::validate(s.table_rows(), s.elements().collect(), names)?;
    Ok(out.with_name(format!("{}[trivial *]", s.name().unwrap_or("S"))))
}

/// `I × I` with `(i,j)(k,l) = (i,l)` and `(i,j)* = (j,i)`; `(i,j)` has index
/// `i·m + j` (0-based).
pub fn rectangular_band(m: usize) -> InvolutionSemigroup {
    assert!(m >= 1);
    from_fn(
        m * m,
        |a, b| (a / m) * m + b % m,
        |a| (a % m) * m + a / m,
        (0..m * m)
            .map(|a| format!("({},{})", a / m + 1, a % m + 1))
            .collect(),
        format!("rect{m}"),
    )
}

/// Chain `0 < 1 < ... < n-1` under `min`, trivial involution.
pub fn chain_semilattice(n: usize) -> InvolutionSemigroup {
    assert!(n >= 1);
    from_fn(
        n,
        |a, b| a.min(b),
        |a| a,
        (0..n).map(|a| a.to_string()).collect(),
        format!("chain{n}"),
    )
}

/// The four-element meet semilattice `{⊥, a, b, ⊤}` (indices 0..3).
pub fn diamond_semilattice() -> InvolutionSemigroup {
    // bit encoding: ⊥ = 00, a = 01, b = 10, ⊤ = 11; meet = bitwise and
    from_fn(
        4,
        |x, y| x & y,
        |x| x,
        ["bot", "a", "b", "top"].map(String::from).to_vec(),
        "diamond".into(),
    )
}

/// `Y = {0, x, y}` with `xy = 0`, `x* = y`, `y* = x`, `0* = 0`
/// (indices 0 = 0, 1 = x, 2 = y).
pub fn nonchain_y_with_swap() -> InvolutionSemigroup {
    from_fn(
        3,
        |a, b| if a == b { a } else { 0 },
        |a| [0, 2, 1][a],
        ["0", "x", "y"].map(String::from).to_vec(),
        "Y-swap".into(),
    )
}

/// The free semilattice on `k` generators: nonempty subsets under union.
/// Element `i` is the subset with bitmask `i + 1`.
pub fn free_semilattice(k: usize) -> InvolutionSemigroup {
    assert!((1..=6).contains(&k));
    let n = (1 << k) - 1;
    from_fn(
        n,
        |a, b| ((a + 1) | (b + 1)) - 1,
        |a| a,
        (1..=n)
            .map(|mask| {
                let gens: Vec<String> = (0..k)
                    .filter(|g| mask >> g & 1 == 1)
                    .map(|g| format!("g{}", g + 1))
                    .collect();
                gens.join("")
            })
            .collect(),
        format!("free-semilattice{k}"),
    )
}

/// All products equal `0`. `star` must be an involution fixing `0`.
pub fn zero_semigroup(n: usize, star: &[Element]) -> Result<InvolutionSemigroup> {
    let names = (0..n)
        .map(|a| if a == 0 { "0".into() } else { format!("z{a}") })
        .collect();
    Ok(
        InvolutionSemigroup::validate(vec![vec![0; n]; n], star.to_vec(), Some(names))?
            .with_name(format!("zero{n}")),
    )
}

fn fresh_name(s: &InvolutionSemigroup, preferred: &str) -> String {
    let mut name = preferred.to_string();
    while s.index_of_name(&name).is_some() {
        name.push('\'');
    }
    name
}

fn labels(s: &InvolutionSemigroup) -> Vec<String> {
    s.elements().map(|a| s.label(a)).collect()
}

/// `S ∪ {0}`, the new element having index `n`.
pub fn adjoin_zero(s: &InvolutionSemigroup) -> InvolutionSemigroup {
    let n = s.order();
    let mut names = labels(s);
    names.push(fresh_name(s, "0"));
    from_fn(
        n + 1,
        |a, b| if a == n || b == n { n } else { s.mult(a, b) },
        |a| if a == n { n } else { s.star(a) },
        names,
        format!("{}^0", s.name().unwrap_or("S")),
    )
}

/// `S ∪ {1}`, the new element having index `n`.
pub fn adjoin_identity(s: &InvolutionSemigroup) -> InvolutionSemigroup {
    let n = s.order();
    let mut names = labels(s);
    names.push(fresh_name(s, "1"));
    from_fn(
        n + 1,
        |a, b| match (a == n, b == n) {
            (true, _) => b,
            (false, true) => a,
            _ => s.mult(a, b),
        },
        |a| if a == n { n } else { s.star(a) },
        names,
        format!("{}^1", s.name().unwrap_or("S")),
    )
}

/// `S₁ × S₂`; the pair `(a, b)` has index `a·|S₂| + b`.
pub fn direct_product(s1: &InvolutionSemigroup, s2: &InvolutionSemigroup) -> InvolutionSemigroup {
    let m = s2.order();
    from_fn(
        s1.order() * m,
        |a, b| s1.mult(a / m, b / m) * m + s2.mult(a % m, b % m),
        |a| s1.star(a / m) * m + s2.star(a % m),
        (0..s1.order() * m)
            .map(|a| format!("({},{})", s1.label(a / m), s2.label(a % m)))
            .collect(),
        format!("{}x{}", s1.name().unwrap_or("S"), s2.name().unwrap_or("T")),
    )
}

/// Partial injections on `n` points, composed right to left, with the
/// inverse partial map as involution.
pub fn symmetric_inverse_monoid(n: usize) -> InvolutionSemigroup {
    assert!((1..=4).contains(&n));
    // a partial map is a vector with n+... entries, `None` meaning undefined
    let mut maps: Vec<Vec<Option<usize>>> = Vec::new();
    fn rec(
        i: usize,
        cur: &mut Vec<Option<usize>>,
        used: &mut [bool],
        out: &mut Vec<Vec<Option<usize>>>,
    ) {
        if i == used.len() {
            out.push(cur.clone());
            return;
        }
        cur.push(None);
        rec(i + 1, cur, used, out);
        cur.pop();
        for j in 0..used.len() {
            if !used[j] {
                used[j] = true;
                cur.push(Some(j));
                rec(i + 1, cur, used, out);
                cur.pop();
                used[j] = false;
            }
        }
    }
    rec(0, &mut Vec::new(), &mut vec![false; n], &mut maps);
    maps.sort();
    let index = |m: &[Option<usize>]| maps.binary_search_by(|q| q.as_slice().cmp(m)).unwrap();
    let compose = |s: &[Option<usize>], t: &[Option<usize>]| -> Vec<Option<usize>> {
        t.iter().map(|ti| ti.and_then(|i| s[i])).collect()
    };
    let inverse = |s: &[Option<usize>]| -> Vec<Option<usize>> {
        let mut inv = vec![None; n];
        for (i, si) in s.iter().enumerate() {
            if let Some(j) = si {
                inv[*j] = Some(i);
            }
        }
        inv
    };
    let names = maps
        .iter()
        .map(|m| {
            m.iter()
                .map(|x| x.map_or("-".to_string(), |j| (j + 1).to_string()))
                .collect::<Vec<_>>()
                .join("")
        })
        .collect();
    from_fn(
        maps.len(),
        |a, b| index(&compose(&maps[a], &maps[b])),
        |a| index(&inverse(&maps[a])),
        names,
        format!("I{n}"),
    )
}

/// Data for a Rees matrix involution semigroup over a group.
///
/// `sandwich[i][j]` is the group element `p_{i,j}`; indices are 0-based, so
/// the normalisation reads `p_{i,0} = p_{0,i} = p_{i,i} = e`.
#[derive(Debug, Clone)]
pub struct ReesMatrixSpec {
    pub group: InvolutionSemigroup,
    pub index_size: usize,
    pub sandwich: Vec<Vec<Element>>,
}

impl ReesMatrixSpec {
    pub fn check(&self) -> Result<Element> {
        let e = self.group.check_group()?;
        let m = self.index_size;
        if m == 0 {
            return Err(Error::InvalidRees("index set must be nonempty".into()));
        }
        if self.sandwich.len() != m || self.sandwich.iter().any(|r| r.len() != m) {
            return Err(Error::InvalidRees(format!(
                "sandwich matrix must be {m}x{m}"
            )));
        }
        for i in 0..m {
            for j in 0..m {
                let p = self.sandwich[i][j];
                if p >= self.group.order() {
                    return Err(Error::InvalidRees(format!(
                        "p[{i}][{j}] = {p} is not a group element"
                    )));
                }
                if p != self.group.star(self.sandwich[j][i]) {
                    return Err(Error::InvalidRees(format!(
                        "p[{i}][{j}] is not the inverse of p[{j}][{i}]"
                    )));
                }
            }
            for (what, p) in [
                ("p[i][0]", self.sandwich[i][0]),
                ("p[0][i]", self.sandwich[0][i]),
                ("p[i][i]", self.sandwich[i][i]),
            ] {
                if p != e {
                    return Err(Error::InvalidRees(format!(
                        "{what} must be the identity for i = {i}"
                    )));
                }
            }
        }
        Ok(e)
    }
}

/// A Rees matrix involution semigroup together with its coordinates.
#[derive(Debug, Clone)]
pub struct ReesMatrix {
    pub semigroup: InvolutionSemigroup,
    pub group_order: usize,
    pub index_size: usize,
}

impl ReesMatrix {
    /// Index of `(i, g, j)`, 0-based `i` and `j`.
    pub fn index(&self, i: usize, g: Element, j: usize) -> Element {
        (i * self.group_order + g) * self.index_size + j
    }

    pub fn decode(&self, x: Element) -> (usize, Element, usize) {
        let j = x % self.index_size;
        let rest = x / self.index_size;
        (rest / self.group_order, rest % self.group_order, j)
    }
}

/// `I × G × I` with `(i,g,j)(k,h,l) = (i, g·p_{j,k}·h, l)` and
/// `(i,g,j)* = (j, g⁻¹, i)`.
pub fn rees_matrix(spec: &ReesMatrixSpec) -> Result<ReesMatrix> {
    spec.check()?;
    let (g, m) = (&spec.group, spec.index_size);
    let rm = ReesMatrix {
        semigroup: InvolutionSemigroup::validate(vec![vec![0]], vec![0], None)?,
        group_order: g.order(),
        index_size: m,
    };
    let n = m * g.order() * m;
    let table = (0..n)
        .map(|a| {
            let (i, x, j) = rm.decode(a);
            (0..n)
                .map(|b| {
                    let (k, y, l) = rm.decode(b);
                    rm.index(i, g.mult(g.mult(x, spec.sandwich[j][k]), y), l)
                })
                .collect()
        })
        .collect();
    let star = (0..n)
        .map(|a| {
            let (i, x, j) = rm.decode(a);
            rm.index(j, g.star(x), i)
        })
        .collect();
    let names = (0..n)
        .map(|a| {
            let (i, x, j) = rm.decode(a);
            format!("({},{},{})", i + 1, g.label(x), j + 1)
        })
        .collect();
    let semigroup = InvolutionSemigroup::validate(table, star, Some(names))?
        .with_name(format!("rees({},{m})", g.name().unwrap_or("G")));
    Ok(ReesMatrix { semigroup, ..rm })
}

/// Name carried by the finite instance built by [`rees_example`].
pub const REES_EXAMPLE_NAME: &str = "rees-example";

/// The finite Rees matrix instance over `S₃` with index set `{1,2,3}`,
/// non-normal subgroup `K = {e, (12)}`, `a = (12)`, `x = (13)`,
/// `p_{2,3} = a`, `p_{3,2} = a⁻¹` and all other entries `e`.
#[derive(Debug, Clone)]
pub struct ReesExample {
    pub rees: ReesMatrix,
    pub group: SymmetricGroup,
    /// `K` as a subset of the group.
    pub subgroup: Subset,
    pub a: Element,
    pub x: Element,
}

impl ReesExample {
    pub fn semigroup(&self) -> &InvolutionSemigroup {
        &self.rees.semigroup
    }

    /// `(i, g, j)` with 1-based `i`, `j`.
    pub fn elem(&self, i: usize, g: Element, j: usize) -> Element {
        self.rees.index(i - 1, g, j - 1)
    }

    pub fn e(&self) -> Element {
        self.group.identity()
    }

    /// `{(1,e,1), (1,e,2), (2,e,1), (2,e,2)}`.
    pub fn rectangular_part(&self) -> Subset {
        let e = self.e();
        self.semigroup()
            .subset([
                self.elem(1, e, 1),
                self.elem(1, e, 2),
                self.elem(2, e, 1),
                self.elem(2, e, 2),
            ])
            .unwrap()
    }

    /// `{(i, h, j) | h ∈ K}`.
    pub fn k_part(&self) -> Subset {
        let s = self.semigroup();
        let mut out = s.empty_set();
        for z in s.elements() {
            let (_, h, _) = self.rees.decode(z);
            if self.subgroup.contains(h) {
                out.insert(z);
            }
        }
        out
    }
}

pub fn rees_example() -> ReesExample {
    let group = symmetric_group(3);
    let g = &group.semigroup;
    let e = group.identity();
    let a = group.index_of_cycles(&[&[1, 2]]);
    let x = group.index_of_cycles(&[&[1, 3]]);
    let m = 3;
    let mut sandwich = vec![vec![e; m]; m];
    sandwich[1][2] = a;
    sandwich[2][1] = g.star(a);
    let spec = ReesMatrixSpec {
        group: g.clone(),
        index_size: m,
        sandwich,
    };
    let mut rees = rees_matrix(&spec).expect("example data satisfies the Rees invariants");
    rees.semigroup = rees.semigroup.with_name(REES_EXAMPLE_NAME);
    let subgroup = g.subset([e, a]).unwrap();
    ReesExample {
        rees,
        group,
        subgroup,
        a,
        x,
    }
}

/// Canonical form of a (table, star) pair: lexicographically least relabelling
/// over all permutations of the elements.
fn canonical_form(
    n: usize,
    table: &[usize],
    star: &[usize],
    perms: &[Vec<usize>],
) -> (Vec<usize>, Vec<usize>) {
    let mut best: Option<(Vec<usize>, Vec<usize>)> = None;
    for p in perms {
        // p maps old index -> new index
        let mut inv = vec![0; n];
        for (old, &new) in p.iter().enumerate() {
            inv[new] = old;
        }
        let mut t = vec![0; n * n];
        for a in 0..n {
            for b in 0..n {
                t[a * n + b] = p[table[inv[a] * n + inv[b]]];
            }
        }
        let s: Vec<usize> = (0..n).map(|a| p[star[inv[a]]]).collect();
        let cand = (t, s);
        if best.as_ref().is_none_or(|b| cand < *b) {
            best = Some(cand);
        }
    }
    best.unwrap()
}

fn involutions(n: usize) -> Vec<Vec<usize>> {
    permutations(n)
        .into_iter()
        .filter(|p| (0..n).all(|i| p[p[i]] == i))
        .collect()
}

/// Every involution semigroup of the given order up to isomorphism
/// (relabelling applied to table and star together), sorted by canonical form.
pub fn enumerate_all(order: usize) -> Result<Vec<InvolutionSemigroup>> {
    if order > 3 {
        return Err(Error::TooLarge { order, limit: 3 });
    }
    if order == 0 {
        return Ok(Vec::new());
    }
    let n = order;
    let cells = n * n;
    let total = n.pow(cells as u32);
    let perms = permutations(n);
    let stars = involutions(n);
    let forms: BTreeSet<(Vec<usize>, Vec<usize>)> = (0..total)
        .into_par_iter()
        .flat_map_iter(|code| {
            let mut c = code;
            let table: Vec<usize> = (0..cells)
                .map(|_| {
                    let v = c % n;
                    c /= n;
                    v
                })
                .collect();
            let assoc = (0..n).all(|a| {
                (0..n).all(|b| {
                    (0..n)
                        .all(|c| table[table[a * n + b] * n + c] == table[a * n + table[b * n + c]])
                })
            });
            let found: Vec<_> = if !assoc {
                Vec::new()
            } else {
                stars
                    .iter()
                    .filter(|star| {
                        (0..n).all(|a| {
                            (0..n).all(|b| star[table[a * n + b]] == table[star[b] * n + star[a]])
                        })
                    })
                    .map(|star| canonical_form(n, &table, star, &perms))
                    .collect()
            };
            found
        })
        .collect();
    Ok(forms
        .into_iter()
        .enumerate()
        .map(|(k, (t, s))| {
            let rows = t.chunks(n).map(<[_]>::to_vec).collect();
            InvolutionSemigroup::validate(rows, s, None)
                .expect("enumerated structure validates")
                .with_name(format!("ord{n}#{k}"))
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn s3_multiplication_convention() {
        let g = symmetric_group(3);
        let s = &g.semigroup;
        let p12 = g.index_of_cycles(&[&[1, 2]]);
        let p13 = g.index_of_cycles(&[&[1, 3]]);
        let p132 = g.index_of_cycles(&[&[1, 3, 2]]);
        // oracle: compose one-line vectors by hand, (στ)(i) = σ(τ(i))
        let (sigma, tau) = (&g.perms[p12], &g.perms[p13]);
        let composed: Vec<usize> = (0..3).map(|i| sigma[tau[i]]).collect();
        assert_eq!(composed, vec![2, 0, 1]);
        assert_eq!(g.index_of(&composed), p132);
        assert_eq!(s.mult(p12, p13), p132);
        assert_eq!(s.label(p132), "(132)");
        assert_eq!(s.order(), 6);
    }

    #[test]
    fn small_symmetric_groups() {
        assert_eq!(symmetric_group(1).semigroup.order(), 1);
        assert_eq!(symmetric_group(2).semigroup.order(), 2);
        assert_eq!(symmetric_group(4).semigroup.order(), 24);
        let g = symmetric_group(4);
        assert_eq!(g.semigroup.check_group().unwrap(), g.identity());
    }

    #[test]
    fn rectangular_band_products() {
        let s = rectangular_band(2);
        let e = |i: usize, j: usize| (i - 1) * 2 + (j - 1);
        assert_eq!(s.mult(e(1, 2), e(2, 1)), e(1, 1));
        assert_eq!(s.star(e(1, 2)), e(2, 1));
        assert_eq!(
            s.hermitian_squares(),
            &s.subset([e(1, 1), e(2, 2)]).unwrap()
        );
        assert!(s.idempotents().is_full());
        assert!(s.square_set().is_full());
        assert_eq!(rectangular_band(1).order(), 1);
    }

    #[test]
    fn group_hermitian_squares_are_the_identity() {
        let g = symmetric_group(3);
        assert_eq!(g.semigroup.hermitian_squares(), &g.subset([0]).unwrap());
    }

    #[test]
    fn y_with_swap() {
        let y = nonchain_y_with_swap();
        assert_eq!(y.hermitian_squares(), &y.subset([0]).unwrap());
        assert!(y.idempotents().is_full());
        assert_eq!(chain_semilattice(1).order(), 1);
    }

    #[test]
    fn zero_semigroups() {
        let z = zero_semigroup(3, &[0, 1, 2]).unwrap();
        assert_eq!(z.square_set(), &z.subset([0]).unwrap());
        zero_semigroup(3, &[0, 2, 1]).unwrap();
        assert!(matches!(
            zero_semigroup(3, &[1, 0, 2]),
            Err(Error::StarNotAntihom { .. })
        ));
    }

    #[test]
    fn adjoined_elements() {
        let m = adjoin_identity(&zero_semigroup(2, &[0, 1]).unwrap());
        assert_eq!(m.identity(), Some(2));
        assert_eq!(m.zero(), Some(0));
        let g0 = adjoin_zero(&symmetric_group(3).semigroup);
        assert!(g0.square_set().is_full());
        assert_eq!(g0.zero(), Some(6));
        let p = direct_product(&cyclic_group(2), &rectangular_band(2));
        assert_eq!(p.order(), 8);
    }

    #[test]
    fn symmetric_inverse_monoid_on_two_points() {
        let s = symmetric_inverse_monoid(2);
        assert_eq!(s.order(), 7);
        assert!(s.identity().is_some());
        assert!(s.zero().is_some());
        assert_eq!(symmetric_inverse_monoid(3).order(), 34);
    }

    #[test]
    fn rees_instance() {
        let ex = rees_example();
        let s = ex.semigroup();
        assert_eq!(s.order(), 54);
        let (e, a) = (ex.e(), ex.a);
        let g = &ex.group.semigroup;
        // conjugate x a x⁻¹ = (23) lies outside K
        let xax = g.mult(g.mult(ex.x, a), g.star(ex.x));
        assert_eq!(xax, ex.group.index_of_cycles(&[&[2, 3]]));
        assert!(!ex.subgroup.contains(xax));
        // (2,a,3)(2,e,1) = (2, a p_{3,2} e, 1) = (2,e,1)
        assert_eq!(s.mult(ex.elem(2, a, 3), ex.elem(2, e, 1)), ex.elem(2, e, 1));
        assert_eq!(s.star(ex.elem(1, a, 3)), ex.elem(3, g.star(a), 1));
        assert_eq!(s.label(ex.elem(2, a, 3)), "(2,(12),3)");
    }

    #[test]
    fn rees_with_one_index_is_the_group() {
        let g = cyclic_group(3);
        let spec = ReesMatrixSpec {
            group: g.clone(),
            index_size: 1,
            sandwich: vec![vec![0]],
        };
        let r = rees_matrix(&spec).unwrap();
        assert_eq!(r.semigroup.table_rows(), g.table_rows());
        assert_eq!(r.semigroup.star_map(), g.star_map());
    }

    #[test]
    fn rees_rejects_asymmetric_sandwich() {
        let g = symmetric_group(3);
        let a = g.index_of_cycles(&[&[1, 2, 3]]);
        let mut sandwich = vec![vec![0; 3]; 3];
        sandwich[1][2] = a;
        sandwich[2][1] = a; // (123) is not its own inverse
        let spec = ReesMatrixSpec {
            group: g.semigroup.clone(),
            index_size: 3,
            sandwich,
        };
        assert!(matches!(rees_matrix(&spec), Err(Error::InvalidRees(_))));
    }

    /// Second, independent count: keep representatives and test each new
    /// structure for an explicit isomorphism against all of them.
    fn recount(n: usize) -> usize {
        let perms = permutations(n);
        let mut reps: Vec<(Vec<usize>, Vec<usize>)> = Vec::new();
        for code in 0..n.pow((n * n) as u32) {
            let mut c = code;
            let t: Vec<usize> = (0..n * n)
                .map(|_| {
                    let v = c % n;
                    c /= n;
                    v
                })
                .collect();
            for star in permutations(n) {
                let rows: Vec<Vec<usize>> = t.chunks(n).map(<[_]>::to_vec).collect();
                if InvolutionSemigroup::validate(rows, star.clone(), None).is_err() {
                    continue;
                }
                let iso = |(rt, rs): &(Vec<usize>, Vec<usize>)| {
                    perms.iter().any(|p| {
                        (0..n).all(|a| p[star[a]] == rs[p[a]])
                            && (0..n)
                                .all(|a| (0..n).all(|b| p[t[a * n + b]] == rt[p[a] * n + p[b]]))
                    })
                };
                if !reps.iter().any(iso) {
                    reps.push((t.clone(), star));
                }
            }
        }
        reps.len()
    }

    #[test]
    fn enumerate_all_counts() {
        assert_eq!(enumerate_all(1).unwrap().len(), 1);
        let two = enumerate_all(2).unwrap();
        assert_eq!(two.len(), recount(2));
        assert_eq!(two.len(), 3);
        assert_eq!(enumerate_all(3).unwrap().len(), recount(3));
        assert!(matches!(enumerate_all(4), Err(Error::TooLarge { .. })));
    }
}
