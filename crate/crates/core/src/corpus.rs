//! Named collections of small involution semigroups, and the subset sweeps
//! used to cross-check the different descriptions of HS-stability.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::constructions::*;
use crate::semigroup::InvolutionSemigroup;
use crate::subset::Subset;

/// Orders up to which subset sweeps are exhaustive (2^16 subsets).
pub const EXHAUSTIVE_ORDER: usize = 16;

/// Number of random subsets drawn when a sweep is not exhaustive.
pub const RANDOM_SUBSETS: usize = 1000;

fn zero(n: usize, star: &[usize]) -> InvolutionSemigroup {
    zero_semigroup(n, star).expect("corpus zero semigroup")
}

fn named(s: InvolutionSemigroup, name: &str) -> InvolutionSemigroup {
    s.with_name(name)
}

/// The hand-picked corpus: groups, bands, the Rees instance, semilattices,
/// zero semigroups, monoids with zero, inverse monoids and direct products.
pub fn curated() -> Vec<InvolutionSemigroup> {
    let mut out = vec![
        symmetric_group(2).semigroup,
        symmetric_group(3).semigroup,
        symmetric_group(4).semigroup,
        cyclic_group(3),
        cyclic_group(4),
        with_trivial_involution(&cyclic_group(4)).unwrap(),
        rectangular_band(1),
        rectangular_band(2),
        rectangular_band(3),
        rees_example().rees.semigroup,
    ];
    out.extend((1..=8).map(chain_semilattice));
    out.extend([
        diamond_semilattice(),
        nonchain_y_with_swap(),
        named(
            with_trivial_involution(&nonchain_y_with_swap()).unwrap(),
            "Y",
        ),
        free_semilattice(3),
    ]);
    out.extend((1..=5).map(|n| zero(n, &(0..n).collect::<Vec<_>>())));
    out.extend([
        named(zero(3, &[0, 2, 1]), "zero3-swap"),
        named(zero(4, &[0, 2, 1, 3]), "zero4-swap"),
        named(zero(5, &[0, 2, 1, 4, 3]), "zero5-swap2"),
        adjoin_identity(&zero(2, &[0, 1])),
        adjoin_identity(&named(zero(3, &[0, 2, 1]), "zero3-swap")),
        adjoin_zero(&symmetric_group(3).semigroup),
        adjoin_zero(&rectangular_band(2)),
        symmetric_inverse_monoid(2),
        direct_product(&cyclic_group(2), &chain_semilattice(2)),
        direct_product(&rectangular_band(2), &cyclic_group(2)),
        direct_product(&nonchain_y_with_swap(), &cyclic_group(2)),
        direct_product(&zero(3, &[0, 1, 2]), &cyclic_group(2)),
        direct_product(&symmetric_group(3).semigroup, &chain_semilattice(2)),
        direct_product(&rectangular_band(3), &cyclic_group(2)),
    ]);
    out
}

/// Every involution semigroup of order 1, 2 and 3 up to isomorphism.
pub fn enumerated() -> Vec<InvolutionSemigroup> {
    (1..=3)
        .flat_map(|n| enumerate_all(n).expect("order <= 3"))
        .collect()
}

/// Curated corpus followed by the exhaustive small-order corpus.
pub fn full() -> Vec<InvolutionSemigroup> {
    let mut out = curated();
    out.extend(enumerated());
    out
}

/// Every subset when `n ≤ EXHAUSTIVE_ORDER`, else `RANDOM_SUBSETS` random
/// subsets (always including `∅` and `S`), deterministic in `seed`.
pub fn subset_sweep(n: usize, seed: u64) -> Vec<Subset> {
    if n <= EXHAUSTIVE_ORDER {
        return (0..1u64 << n).map(|m| Subset::from_mask(n, m)).collect();
    }
    random_subsets(n, RANDOM_SUBSETS, seed)
}

/// `count` random subsets; each draw first picks a density so that small
/// and large subsets are both represented.
pub fn random_subsets(n: usize, count: usize, seed: u64) -> Vec<Subset> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = vec![Subset::empty(n), Subset::full(n)];
    while out.len() < count {
        let density: f64 = rng.gen_range(0.0..1.0f64).powi(2);
        let bits: Vec<bool> = (0..n).map(|_| rng.gen_bool(density)).collect();
        out.push(Subset::from_bools(&bits));
    }
    out.truncate(count);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_members_have_distinct_names() {
        let c = curated();
        let mut names: Vec<_> = c.iter().map(|s| s.name().unwrap().to_string()).collect();
        names.sort();
        let before = names.len();
        names.dedup();
        assert_eq!(before, names.len(), "{names:?}");
        assert!(c.iter().any(|s| s.order() == 54));
    }

    #[test]
    fn sweeps() {
        assert_eq!(subset_sweep(4, 0).len(), 16);
        let r = subset_sweep(30, 7);
        assert_eq!(r.len(), RANDOM_SUBSETS);
        assert_eq!(r, subset_sweep(30, 7));
        assert!(r.iter().any(|s| s.len() == 1 || s.len() == 2));
    }
}
