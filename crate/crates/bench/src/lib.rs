//! Shared input generators for the criterion benchmarks.

use tnncell::diagram::CauchonDiagram;
use tnncell::exact::Matrix;
use tnncell::recognition::{build_scheme, CellMinorScheme};
use tnncell::reduction::random_representative;
use tnncell::rng::SplitMix64;

/// A reproducible benchmark case: a random cell of size `n×n`, its scheme,
/// and a matrix inside the cell.
pub struct Case {
    pub diagram: CauchonDiagram,
    pub scheme: CellMinorScheme,
    pub matrix: Matrix,
}

pub fn case(n: usize, seed: u64) -> Case {
    let mut rng = SplitMix64::new(seed);
    let diagram = CauchonDiagram::random(n, n, &mut rng);
    let scheme = build_scheme(&diagram);
    let matrix = random_representative(&diagram, rng.next_u64());
    Case {
        diagram,
        scheme,
        matrix,
    }
}
