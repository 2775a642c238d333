//! Small worked examples shared by tests, the acceptance suite and the CLI.

use crate::complexes::FreeComplex;
use crate::determinantal::Presentation;
use crate::polymatrix::generic_matrix;
use crate::subsets::SubsetIndex;
use crate::{CoeffDomain, PolyMatrix, Polynomial, Ring, RingCtx, RingExt};

/// ℤ[x, y].
pub fn xy_ring() -> Ring {
    RingCtx::with_names(vec!["x".into(), "y".into()], CoeffDomain::Integers).expect("valid names")
}

/// 0 ← R² ← R³ ← R ← 0 with d₁ = [[x², 0, 0], [0, x, y]] and d₂ = (0, −y, x)ᵗ.
pub fn two_step_complex() -> FreeComplex {
    let r = xy_ring();
    let d1 = PolyMatrix::parse_rows(&r, &[vec!["x^2", "0", "0"], vec!["0", "x", "y"]]).expect("parses");
    let d2 = PolyMatrix::parse_rows(&r, &[vec!["0"], vec!["-y"], vec!["x"]]).expect("parses");
    FreeComplex::new(&r, vec![2, 3, 1], vec![d1, d2]).expect("shapes")
}

/// The presentation matrix d₁ of [`two_step_complex`].
pub fn two_step_presentation() -> Presentation {
    Presentation::new(two_step_complex().differential(1).clone())
}

fn cofactor_row(b: &PolyMatrix, triple: &[usize]) -> Vec<Polynomial> {
    // v_i = (−1)^pos · det B[triple − i], so that v·B = 0
    let ring = b.ring();
    let all: Vec<usize> = (0..b.cols()).collect();
    let mut v = vec![ring.zero(); b.rows()];
    for (pos, &i) in triple.iter().enumerate() {
        let rest: Vec<usize> = triple.iter().copied().filter(|&j| j != i).collect();
        let m = b.minor0(&rest, &all);
        v[i] = if pos % 2 == 0 { m } else { -m };
    }
    v
}

/// Hilbert–Burch complex R ← R³ ← R² with d₂ = B generic 3×2 in y_1..y_6 and
/// d₁ the row of signed maximal minors of B; its level-1 multiplier is a unit.
pub fn hilbert_burch_unit() -> FreeComplex {
    let ring = RingCtx::indexed("y", 6, CoeffDomain::Integers).expect("ring");
    let b = generic_matrix(&ring, 1, 3, 2).expect("fits");
    let d1 = PolyMatrix::from_rows(&ring, vec![cofactor_row(&b, &[0, 1, 2])]).expect("row");
    FreeComplex::new(&ring, vec![1, 3, 2], vec![d1, b]).expect("shapes")
}

/// R³ ← R⁵ ← R² with d₂ = B generic 5×2 in y_1..y_10 (the matrix B of the
/// appendix session) and d₁ built from the cofactor vectors of the row
/// triples {1,2,3}, {1,2,4}, {1,2,5}; the level-1 multiplier is ±[12]².
pub fn hilbert_burch_352() -> FreeComplex {
    let ring = RingCtx::indexed("y", 10, CoeffDomain::Integers).expect("ring");
    let b = generic_matrix(&ring, 1, 5, 2).expect("fits");
    let rows = [[0, 1, 2], [0, 1, 3], [0, 1, 4]].iter().map(|t| cofactor_row(&b, t)).collect();
    let a = PolyMatrix::from_rows(&ring, rows).expect("rows");
    FreeComplex::new(&ring, vec![3, 5, 2], vec![a, b]).expect("shapes")
}

/// The 2×2 minor of rows {1,2} of the B in [`hilbert_burch_352`].
pub fn hilbert_burch_352_bracket() -> Polynomial {
    let c = hilbert_burch_352();
    c.differential(2).minor(&SubsetIndex::full(2), &SubsetIndex::full(2)).expect("2x2")
}

/// A bifiltration on a 4×4 grid whose H₀ has generators at (0,0), (1,1),
/// (1,2) and relations at (3,1), (2,2), (1,3): the free class of the
/// component {b, d} plus the shape R(−1,−1)/(x²) ⊕ R(−1,−2)/(x, y).
pub fn engineered_h0_bifiltration() -> crate::persistence::Bifiltration {
    use crate::persistence::{Bifiltration, Simplex};
    let s = |v: &[usize], g: [u32; 2]| Simplex { vertices: v.to_vec(), grade: g };
    let labels = ["a", "b", "c", "d"].map(String::from).to_vec();
    let simplices = vec![
        s(&[1], [0, 0]),
        s(&[3], [0, 0]),
        s(&[1, 3], [0, 0]),
        s(&[0], [1, 1]),
        s(&[0, 1], [3, 1]),
        s(&[2], [1, 2]),
        s(&[1, 2], [2, 2]),
        s(&[2, 3], [1, 3]),
    ];
    Bifiltration::new(labels, simplices, [4, 4]).expect("valid fixture")
}
