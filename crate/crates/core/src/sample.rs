//! Seeded random complexes for property checks.

use rand::Rng;

use crate::complex::SimplicialComplex;
use crate::vertex::VertexSet;

/// A random complex on `1..=n`: the closure of up to `n + 1` random facets,
/// each vertex kept with probability `density`.
pub fn random_complex<R: Rng + ?Sized>(rng: &mut R, n: usize, density: f64) -> SimplicialComplex {
    let facets = rng.gen_range(0..=n + 1);
    let sets: Vec<VertexSet> = (0..facets)
        .map(|_| {
            let bits = (1..=n)
                .filter(|_| rng.gen_bool(density))
                .fold(0u64, |acc, v| acc | (1u64 << v));
            VertexSet::from_bits(bits)
        })
        .collect();
    SimplicialComplex::from_facets(n, sets).expect("labels lie in 1..=n")
}

/// A random complex with a random vertex count in `min_n..=max_n` and a
/// random density.
pub fn random_small_complex<R: Rng + ?Sized>(rng: &mut R, min_n: usize, max_n: usize) -> SimplicialComplex {
    let n = rng.gen_range(min_n..=max_n);
    let density = rng.gen_range(0.2..0.8);
    random_complex(rng, n, density)
}
