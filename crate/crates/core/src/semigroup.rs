//! Finite involution semigroups given by a Cayley table and a star map.

use std::fmt;
use std::path::Path;
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::subset::Subset;

/// Element index into a semigroup's Cayley table.
pub type Element = usize;

/// A finite semigroup `(S, ∘, *)` whose elements are `0..order`.
///
/// Construction goes through [`InvolutionSemigroup::validate`], which checks
/// associativity, `(x*)* = x` and `(xy)* = y*x*` exhaustively, so every value
/// of this type is a genuine involution semigroup. Values are immutable; the
/// derived sets (hermitian squares, idempotents, `S²`, ...) are computed on
/// first use and shared.
#[derive(Clone)]
pub struct InvolutionSemigroup {
    order: usize,
    table: Vec<Element>,
    star: Vec<Element>,
    name: Option<String>,
    names: Option<Vec<String>>,
    derived: OnceLock<Derived>,
}

#[derive(Clone)]
struct Derived {
    hermitian: Subset,
    idempotents: Subset,
    square: Subset,
    hermitian_square_products: Subset,
    conjugated_h2: Subset,
}

impl InvolutionSemigroup {
    /// Checks the involution semigroup axioms and builds the structure.
    ///
    /// Reports the first violated axiom, scanning triples and pairs in
    /// lexicographic index order.
    pub fn validate(
        table: Vec<Vec<Element>>,
        star: Vec<Element>,
        names: Option<Vec<String>>,
    ) -> Result<Self> {
        let n = table.len();
        if n == 0 {
            return Err(Error::Shape(
                "a semigroup needs at least one element".into(),
            ));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (a, row) in table.iter().enumerate() {
            if row.len() != n {
                return Err(Error::Shape(format!(
                    "row {a} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (b, &v) in row.iter().enumerate() {
                if v >= n {
                    return Err(Error::IndexOutOfRange {
                        index: v,
                        order: n,
                        context: format!("table[{a}][{b}]"),
                    });
                }
                flat.push(v);
            }
        }
        if star.len() != n {
            return Err(Error::Shape(format!(
                "star has {} entries, expected {n}",
                star.len()
            )));
        }
        for (a, &v) in star.iter().enumerate() {
            if v >= n {
                return Err(Error::IndexOutOfRange {
                    index: v,
                    order: n,
                    context: format!("star[{a}]"),
                });
            }
        }
        if let Some(names) = &names {
            if names.len() != n {
                return Err(Error::Shape(format!(
                    "names has {} entries, expected {n}",
                    names.len()
                )));
            }
        }

        let m = |a: usize, b: usize| flat[a * n + b];
        for a in 0..n {
            for b in 0..n {
                let ab = m(a, b);
                for c in 0..n {
                    if m(ab, c) != m(a, m(b, c)) {
                        return Err(Error::NotAssociative { a, b, c });
                    }
                }
            }
        }
        for a in 0..n {
            if star[star[a]] != a {
                return Err(Error::StarNotInvolutive { a });
            }
        }
        for a in 0..n {
            for b in 0..n {
                if star[m(a, b)] != m(star[b], star[a]) {
                    return Err(Error::StarNotAntihom { a, b });
                }
            }
        }

        Ok(InvolutionSemigroup {
            order: n,
            table: flat,
            star,
            name: None,
            names,
            derived: OnceLock::new(),
        })
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display label of an element: its name when present, else its index.
    pub fn label(&self, a: Element) -> String {
        match &self.names {
            Some(names) => names[a].clone(),
            None => a.to_string(),
        }
    }

    pub fn index_of_name(&self, name: &str) -> Option<Element> {
        self.names.as_ref()?.iter().position(|s| s == name)
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    pub fn elements(&self) -> std::ops::Range<Element> {
        0..self.order
    }

    #[inline]
    pub fn mult(&self, a: Element, b: Element) -> Element {
        self.table[a * self.order + b]
    }

    /// Product of a nonempty word of elements.
    pub fn mult_all(&self, word: &[Element]) -> Element {
        let (&first, rest) = word.split_first().expect("empty word");
        rest.iter().fold(first, |acc, &b| self.mult(acc, b))
    }

    #[inline]
    pub fn star(&self, a: Element) -> Element {
        self.star[a]
    }

    pub fn table_rows(&self) -> Vec<Vec<Element>> {
        self.table.chunks(self.order).map(<[_]>::to_vec).collect()
    }

    pub fn star_map(&self) -> &[Element] {
        &self.star
    }

    pub fn empty_set(&self) -> Subset {
        Subset::empty(self.order)
    }

    pub fn full_set(&self) -> Subset {
        Subset::full(self.order)
    }

    pub fn subset<I: IntoIterator<Item = Element>>(&self, items: I) -> Result<Subset> {
        Subset::from_indices(self.order, items)
    }

    pub(crate) fn check_universe(&self, a: &Subset) -> Result<()> {
        if a.universe() != self.order {
            return Err(Error::MixedParents(a.universe(), self.order));
        }
        Ok(())
    }

    /// `AB = {ab | a ∈ A, b ∈ B}`.
    pub fn set_product(&self, a: &Subset, b: &Subset) -> Subset {
        let mut out = self.empty_set();
        let bs: Vec<_> = b.iter().collect();
        for x in a {
            for &y in &bs {
                out.insert(self.mult(x, y));
            }
        }
        out
    }

    /// The complex product `A₁ ⋯ Aₙ`, folded left.
    pub fn complex_product(&self, sets: &[Subset]) -> Result<Subset> {
        let (first, rest) = sets.split_first().ok_or(Error::EmptyList)?;
        for s in sets {
            self.check_universe(s)?;
        }
        Ok(rest
            .iter()
            .fold(first.clone(), |acc, s| self.set_product(&acc, s)))
    }

    /// `A* = {a* | a ∈ A}`.
    pub fn star_set(&self, a: &Subset) -> Subset {
        let mut out = self.empty_set();
        for x in a {
            out.insert(self.star(x));
        }
        out
    }

    fn derived(&self) -> &Derived {
        self.derived.get_or_init(|| {
            let mut hermitian = self.empty_set();
            let mut idempotents = self.empty_set();
            for x in self.elements() {
                hermitian.insert(self.mult(x, self.star(x)));
                if self.mult(x, x) == x {
                    idempotents.insert(x);
                }
            }
            let square = self.set_product(&self.full_set(), &self.full_set());
            let h2 = self.set_product(&hermitian, &hermitian);
            let mut conjugated_h2 = self.empty_set();
            for x in self.elements() {
                let xs = self.star(x);
                for q in &h2 {
                    conjugated_h2.insert(self.mult(self.mult(x, q), xs));
                }
            }
            Derived {
                hermitian,
                idempotents,
                square,
                hermitian_square_products: h2,
                conjugated_h2,
            }
        })
    }

    /// `H_S = {xx* | x ∈ S}`.
    pub fn hermitian_squares(&self) -> &Subset {
        &self.derived().hermitian
    }

    /// `E_S`, the idempotents.
    pub fn idempotents(&self) -> &Subset {
        &self.derived().idempotents
    }

    /// `S² = SS`.
    pub fn square_set(&self) -> &Subset {
        &self.derived().square
    }

    /// `H_S²`, products of two hermitian squares.
    pub fn hermitian_pairs(&self) -> &Subset {
        &self.derived().hermitian_square_products
    }

    /// `⋃ₓ x H_S² x*`.
    pub fn conjugated_hermitian_pairs(&self) -> &Subset {
        &self.derived().conjugated_h2
    }

    /// First pair `(a, b)` of members of `t` whose product leaves `t`.
    pub fn product_violation(&self, t: &Subset) -> Option<(Element, Element)> {
        let members: Vec<_> = t.iter().collect();
        for &a in &members {
            for &b in &members {
                if !t.contains(self.mult(a, b)) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// First member of `t` whose star leaves `t`.
    pub fn star_violation(&self, t: &Subset) -> Option<Element> {
        t.iter().find(|&a| !t.contains(self.star(a)))
    }

    pub fn is_subsemigroup(&self, t: &Subset) -> bool {
        self.product_violation(t).is_none()
    }

    pub fn is_inv_subsemigroup(&self, t: &Subset) -> bool {
        self.star_violation(t).is_none() && self.product_violation(t).is_none()
    }

    /// Two-sided identity, if one exists.
    pub fn identity(&self) -> Option<Element> {
        self.elements().find(|&e| {
            self.elements()
                .all(|x| self.mult(e, x) == x && self.mult(x, e) == x)
        })
    }

    /// Two-sided zero, if one exists.
    pub fn zero(&self) -> Option<Element> {
        self.elements().find(|&z| {
            self.elements()
                .all(|x| self.mult(z, x) == z && self.mult(x, z) == z)
        })
    }

    pub fn is_commutative(&self) -> bool {
        self.commutativity_violation().is_none()
    }

    pub fn commutativity_violation(&self) -> Option<(Element, Element)> {
        for a in self.elements() {
            for b in a + 1..self.order {
                if self.mult(a, b) != self.mult(b, a) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// Checks that the structure is a group whose star is inversion.
    pub fn check_group(&self) -> Result<Element> {
        let e = self
            .identity()
            .ok_or_else(|| Error::NotAGroup("no identity element".into()))?;
        for a in self.elements() {
            let inv = self.star(a);
            if self.mult(a, inv) != e || self.mult(inv, a) != e {
                return Err(Error::NotAGroup(format!(
                    "star({a}) = {inv} is not the inverse of {a}"
                )));
            }
        }
        Ok(e)
    }

    pub fn to_file(&self) -> SemigroupFile {
        SemigroupFile {
            order: self.order,
            table: self.table_rows(),
            star: self.star.clone(),
            name: self.name.clone(),
            names: self.names.clone(),
        }
    }

    pub fn from_file(file: SemigroupFile) -> Result<Self> {
        if file.order != file.table.len() {
            return Err(Error::Shape(format!(
                "order is {} but the table has {} rows",
                file.order,
                file.table.len()
            )));
        }
        let s = Self::validate(file.table, file.star, file.names)?;
        Ok(match file.name {
            Some(name) => s.with_name(name),
            None => s,
        })
    }

    pub fn from_json_str(json: &str) -> Result<Self> {
        Self::from_file(serde_json::from_str(json)?)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_file()).expect("semigroup file serializes")
    }

    pub fn read_json(path: impl AsRef<Path>) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn write_json(&self, path: impl AsRef<Path>) -> Result<()> {
        let mut text = self.to_json_string();
        text.push('\n');
        std::fs::write(path, text)?;
        Ok(())
    }
}

impl PartialEq for InvolutionSemigroup {
    fn eq(&self, other: &Self) -> bool {
        self.table == other.table && self.star == other.star
    }
}

impl Eq for InvolutionSemigroup {}

impl fmt::Debug for InvolutionSemigroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("InvolutionSemigroup")
            .field("name", &self.name)
            .field("order", &self.order)
            .field("table", &self.table_rows())
            .field("star", &self.star)
            .finish()
    }
}

/// On-disk JSON interchange: `table[a][b] = a∘b`, 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SemigroupFile {
    pub order: usize,
    pub table: Vec<Vec<Element>>,
    pub star: Vec<Element>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
}

/// A word in the generators of a subset, each letter optionally starred.
///
/// Produced by the traced generator closures; `value` is the element the word
/// evaluates to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ElementTerm {
    pub letters: Vec<(Element, bool)>,
    pub value: Element,
}

impl ElementTerm {
    pub fn generator(a: Element) -> Self {
        ElementTerm {
            letters: vec![(a, false)],
            value: a,
        }
    }

    pub fn evaluate(&self, s: &InvolutionSemigroup) -> Element {
        let word: Vec<_> = self
            .letters
            .iter()
            .map(|&(g, starred)| if starred { s.star(g) } else { g })
            .collect();
        s.mult_all(&word)
    }

    pub fn is_consistent(&self, s: &InvolutionSemigroup) -> bool {
        !self.letters.is_empty() && self.evaluate(s) == self.value
    }

    pub(crate) fn concat(&self, other: &ElementTerm, value: Element) -> Self {
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        ElementTerm { letters, value }
    }

    /// `(g₁ ⋯ g_k)* = g_k* ⋯ g₁*`.
    pub(crate) fn starred(&self, value: Element) -> Self {
        ElementTerm {
            letters: self.letters.iter().rev().map(|&(g, f)| (g, !f)).collect(),
            value,
        }
    }
}

impl fmt::Display for ElementTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (k, (g, starred)) in self.letters.iter().enumerate() {
            if k > 0 {
                write!(f, "·")?;
            }
            write!(f, "{g}{}", if *starred { "*" } else { "" })?;
        }
        write!(f, " = {}", self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn chain2() -> InvolutionSemigroup {
        InvolutionSemigroup::validate(vec![vec![0, 0], vec![0, 1]], vec![0, 1], None).unwrap()
    }

    #[test]
    fn chain_semilattice_and_z2_validate() {
        chain2();
        InvolutionSemigroup::validate(vec![vec![0, 1], vec![1, 0]], vec![0, 1], None).unwrap();
    }

    #[test]
    fn swap_star_on_max_semilattice_is_fine() {
        // (0·0)* = 1 = 1·1: the swap happens to satisfy the antihomomorphism
        // law on the diagonal but fails off it.
        let r = InvolutionSemigroup::validate(vec![vec![0, 1], vec![1, 1]], vec![1, 0], None);
        assert!(matches!(r, Err(Error::StarNotAntihom { .. })));
    }

    /// Brute force: over every associative 3-element table and every
    /// involutive star map, find one that breaks `(ab)* = b*a*` and check
    /// that validation reports exactly the first such pair.
    #[test]
    fn antihom_failure_found_by_search() {
        let n = 3;
        let mut hits = 0;
        for code in 0..3usize.pow(9) {
            let mut c = code;
            let table: Vec<Vec<usize>> = (0..n)
                .map(|_| {
                    (0..n)
                        .map(|_| {
                            let v = c % 3;
                            c /= 3;
                            v
                        })
                        .collect()
                })
                .collect();
            let assoc = (0..n).all(|a| {
                (0..n).all(|b| (0..n).all(|c| table[table[a][b]][c] == table[a][table[b][c]]))
            });
            if !assoc {
                continue;
            }
            for star in [vec![0, 2, 1], vec![1, 0, 2], vec![2, 1, 0]] {
                let bad = (0..n)
                    .flat_map(|a| (0..n).map(move |b| (a, b)))
                    .find(|&(a, b)| star[table[a][b]] != table[star[b]][star[a]]);
                if let Some((a, b)) = bad {
                    hits += 1;
                    match InvolutionSemigroup::validate(table.clone(), star, None) {
                        Err(Error::StarNotAntihom { a: ea, b: eb }) => assert_eq!((ea, eb), (a, b)),
                        other => panic!("expected StarNotAntihom, got {other:?}"),
                    }
                }
            }
        }
        assert!(hits > 0);
    }

    #[test]
    fn non_associative_and_bad_star_are_reported() {
        // a·b = b+1 capped: not associative
        let t = vec![vec![1, 1], vec![0, 0]];
        assert!(matches!(
            InvolutionSemigroup::validate(t, vec![0, 1], None),
            Err(Error::NotAssociative { .. })
        ));
        let t = vec![vec![0, 0, 0], vec![0, 0, 0], vec![0, 0, 0]];
        assert!(matches!(
            InvolutionSemigroup::validate(t.clone(), vec![1, 2, 0], None),
            Err(Error::StarNotInvolutive { a: 0 })
        ));
        assert!(matches!(
            InvolutionSemigroup::validate(t, vec![0, 5, 2], None),
            Err(Error::IndexOutOfRange { index: 5, .. })
        ));
    }

    #[test]
    fn zero_semigroup_products() {
        let t = vec![vec![0; 3]; 3];
        let s = InvolutionSemigroup::validate(t, vec![0, 1, 2], None).unwrap();
        let a = s.subset([1]).unwrap();
        let b = s.subset([2]).unwrap();
        assert_eq!(s.complex_product(&[a, b]).unwrap(), s.subset([0]).unwrap());
        assert_eq!(s.square_set(), &s.subset([0]).unwrap());
    }

    #[test]
    fn complex_product_errors() {
        let s = chain2();
        assert!(matches!(s.complex_product(&[]), Err(Error::EmptyList)));
        let wrong = Subset::empty(3);
        assert!(matches!(
            s.complex_product(&[s.full_set(), wrong]),
            Err(Error::MixedParents(3, 2))
        ));
    }

    #[test]
    fn json_rejects_unknown_keys_and_bad_order() {
        let ok = r#"{"order":2,"table":[[0,0],[0,1]],"star":[0,1],"name":"chain"}"#;
        let s = InvolutionSemigroup::from_json_str(ok).unwrap();
        assert_eq!(s.name(), Some("chain"));
        let extra = r#"{"order":2,"table":[[0,0],[0,1]],"star":[0,1],"extra":1}"#;
        assert!(matches!(
            InvolutionSemigroup::from_json_str(extra),
            Err(Error::Json(_))
        ));
        let bad = r#"{"order":3,"table":[[0,0],[0,1]],"star":[0,1]}"#;
        assert!(matches!(
            InvolutionSemigroup::from_json_str(bad),
            Err(Error::Shape(_))
        ));
    }

    #[test]
    fn json_round_trip() {
        let s = chain2().with_name("c2");
        let back = InvolutionSemigroup::from_json_str(&s.to_json_string()).unwrap();
        assert_eq!(back, s);
        assert_eq!(back.to_file(), s.to_file());
    }
}
