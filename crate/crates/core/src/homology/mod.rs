//! Integer homology of the clique complex of a digital image.
//!
//! A `q`-simplex is a set of `q+1` mutually adjacent points, stored as a
//! strictly increasing tuple. `H_q` is computed as cycles modulo boundaries
//! via two Smith normal forms: one for `∂_q` (giving a basis of the cycles),
//! one for `∂_{q+1}` rewritten in that basis (giving the quotient).

mod matrix;
mod smith;

use std::collections::HashMap;

use serde::Serialize;

pub use matrix::IntegerMatrix;
pub use smith::{
    exact_smith_normal_form, smith_normal_form, BigIntMatrix, Dense, ExactSmithForm, SmithForm,
};

use crate::error::{Error, Result};
use crate::homotopy::one_step_strong_homotopic;
use crate::image::DigitalImage;
use crate::map::{same_image, VertexMap};

pub type Simplex = Vec<usize>;

/// All `(q+1)`-cliques of `x`, sorted lexicographically.
pub fn simplices(x: &DigitalImage, q: usize) -> Vec<Simplex> {
    fn extend(x: &DigitalImage, size: usize, cur: &mut Vec<usize>, out: &mut Vec<Simplex>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        let start = cur.last().map_or(0, |&l| l + 1);
        for v in start..x.len() {
            if cur.iter().all(|&w| x.is_adjacent(v, w)) {
                cur.push(v);
                extend(x, size, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if q < x.len() {
        extend(x, q + 1, &mut Vec::with_capacity(q + 1), &mut out);
    }
    out
}

/// Sorts `tuple` in place and returns the sign of the sorting permutation,
/// or `None` if it has repeated entries (a degenerate simplex, read as 0).
pub fn orient(tuple: &mut [usize]) -> Option<i64> {
    let mut sign = 1;
    for i in 1..tuple.len() {
        let mut j = i;
        while j > 0 && tuple[j - 1] > tuple[j] {
            tuple.swap(j - 1, j);
            sign = -sign;
            j -= 1;
        }
    }
    if tuple.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(sign)
    }
}

#[derive(Clone, Debug)]
pub struct ChainComplex {
    basis: Vec<Vec<Simplex>>,
    index: Vec<HashMap<Simplex, usize>>,
}

impl ChainComplex {
    pub fn new(x: &DigitalImage) -> Self {
        let mut basis = Vec::new();
        for q in 0.. {
            let s = simplices(x, q);
            if s.is_empty() {
                break;
            }
            basis.push(s);
        }
        let index = basis
            .iter()
            .map(|b| b.iter().enumerate().map(|(i, s)| (s.clone(), i)).collect())
            .collect();
        ChainComplex { basis, index }
    }

    /// Largest `q` with a `q`-simplex (clique number minus one).
    pub fn top_dimension(&self) -> usize {
        self.basis.len() - 1
    }

    pub fn basis(&self, q: usize) -> &[Simplex] {
        self.basis.get(q).map_or(&[], Vec::as_slice)
    }

    pub fn rank(&self, q: usize) -> usize {
        self.basis(q).len()
    }

    pub fn index_of(&self, simplex: &[usize]) -> Option<usize> {
        let q = simplex.len().checked_sub(1)?;
        self.index.get(q)?.get(simplex).copied()
    }

    /// `∂_q : C_q -> C_{q-1}`; `∂_0` is the zero map to the trivial group.
    pub fn boundary(&self, q: usize) -> IntegerMatrix {
        let cols = self.rank(q);
        if q == 0 {
            return IntegerMatrix::zeros(0, cols);
        }
        let mut m = IntegerMatrix::zeros(self.rank(q - 1), cols);
        for (j, s) in self.basis(q).iter().enumerate() {
            for i in 0..s.len() {
                let mut face = s.clone();
                face.remove(i);
                let row = self.index_of(&face).expect("faces of cliques are cliques");
                m.set(row, j, if i % 2 == 0 { 1 } else { -1 });
            }
        }
        m
    }

    /// Chain written as a coefficient vector: the oriented simplex
    /// `⟨tuple⟩` (any order; zero if degenerate).
    pub fn chain_of(&self, tuple: &[usize]) -> Result<Vec<i64>> {
        let q = tuple
            .len()
            .checked_sub(1)
            .ok_or_else(|| Error::param("empty simplex"))?;
        let mut v = vec![0; self.rank(q)];
        let mut t = tuple.to_vec();
        if let Some(sign) = orient(&mut t) {
            let i = self
                .index_of(&t)
                .ok_or_else(|| Error::param(format!("{t:?} is not a simplex")))?;
            v[i] = sign;
        }
        Ok(v)
    }
}

/// `H_q ≅ Z^betti ⊕ Z/torsion[0] ⊕ ...`, with explicit generators and a
/// projection from cycles to these coordinates.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HomologyPresentation {
    pub q: usize,
    pub betti: usize,
    pub torsion: Vec<i64>,
    /// Columns are cycles representing the free generators, then the
    /// torsion generators.
    #[serde(skip)]
    pub generators: IntegerMatrix,
    /// Sends the chain coordinates of a cycle to its class, before reduction
    /// by [`HomologyPresentation::moduli`].
    #[serde(skip)]
    pub projection: IntegerMatrix,
}

impl HomologyPresentation {
    /// Per-coordinate modulus: 0 for free coordinates, `d` for `Z/d`.
    pub fn moduli(&self) -> Vec<i64> {
        std::iter::repeat_n(0, self.betti)
            .chain(self.torsion.iter().copied())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.betti + self.torsion.len()
    }

    pub fn is_trivial(&self) -> bool {
        self.rank() == 0
    }

    /// Class of a cycle given by its chain coordinates.
    pub fn class_of(&self, cycle: &[i64]) -> Result<Vec<i64>> {
        let raw = self.projection.mul_vec(cycle)?;
        Ok(reduce(&raw, &self.moduli()))
    }
}

fn reduce(v: &[i64], moduli: &[i64]) -> Vec<i64> {
    v.iter()
        .zip(moduli)
        .map(|(&x, &m)| if m == 0 { x } else { x.rem_euclid(m) })
        .collect()
}

/// Homology of one chain complex in degree `q`.
pub fn homology_of(c: &ChainComplex, q: usize) -> Result<HomologyPresentation> {
    let n = c.rank(q);
    let dq = smith_normal_form(&c.boundary(q))?;
    let r = dq.rank();
    let kernel_rows: Vec<usize> = (r..n).collect();
    // kernel basis: trailing columns of V; coordinates: trailing rows of V^-1
    let kernel = dq.v.select_columns(&kernel_rows);
    let to_kernel = dq.v_inv.select_rows(&kernel_rows);
    let boundaries = to_kernel.mul(&c.boundary(q + 1))?;
    let s = smith_normal_form(&boundaries)?;
    let factors = s.invariant_factors();
    let z = kernel_rows.len();
    let torsion_idx: Vec<usize> = (0..factors.len()).filter(|&i| factors[i] > 1).collect();
    let mut keep: Vec<usize> = (factors.len()..z).collect();
    keep.extend(&torsion_idx);
    let projection = s.u.mul(&to_kernel)?.select_rows(&keep);
    let generators = kernel.mul(&s.u_inv)?.select_columns(&keep);
    Ok(HomologyPresentation {
        q,
        betti: z - factors.len(),
        torsion: torsion_idx.iter().map(|&i| factors[i]).collect(),
        generators,
        projection,
    })
}

pub fn homology(x: &DigitalImage, q: usize) -> Result<HomologyPresentation> {
    homology_of(&ChainComplex::new(x), q)
}

/// Chain complex and homology groups of one image, for repeated use.
#[derive(Clone, Debug)]
pub struct Homology {
    complex: ChainComplex,
    groups: Vec<HomologyPresentation>,
}

impl Homology {
    pub fn new(x: &DigitalImage) -> Result<Self> {
        let complex = ChainComplex::new(x);
        let groups = (0..=complex.top_dimension() + 1)
            .map(|q| homology_of(&complex, q))
            .collect::<Result<_>>()?;
        Ok(Homology { complex, groups })
    }

    pub fn complex(&self) -> &ChainComplex {
        &self.complex
    }

    pub fn group(&self, q: usize) -> HomologyPresentation {
        self.groups.get(q).cloned().unwrap_or(HomologyPresentation {
            q,
            betti: 0,
            torsion: Vec::new(),
            generators: IntegerMatrix::zeros(0, 0),
            projection: IntegerMatrix::zeros(0, 0),
        })
    }

    pub fn betti_numbers(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.betti).collect()
    }
}

fn chain_map_between(
    f: &VertexMap<'_>,
    cx: &ChainComplex,
    cy: &ChainComplex,
    q: usize,
) -> Result<IntegerMatrix> {
    f.require_continuous("f")?;
    let mut m = IntegerMatrix::zeros(cy.rank(q), cx.rank(q));
    for (j, s) in cx.basis(q).iter().enumerate() {
        let mut t: Vec<usize> = s.iter().map(|&v| f.apply(v)).collect();
        if let Some(sign) = orient(&mut t) {
            let i = cy
                .index_of(&t)
                .expect("continuous maps send simplices to simplices");
            m.set(i, j, sign);
        }
    }
    Ok(m)
}

/// `f_# : C_q(X) -> C_q(Y)` in the sorted simplex bases.
pub fn induced_chain_map(f: &VertexMap<'_>, q: usize) -> Result<IntegerMatrix> {
    chain_map_between(
        f,
        &ChainComplex::new(f.dom()),
        &ChainComplex::new(f.cod()),
        q,
    )
}

/// `f_* : H_q(X) -> H_q(Y)` in presentation coordinates: column `j` is the
/// class of the image of generator `j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomologyMap {
    pub q: usize,
    pub matrix: IntegerMatrix,
    pub source_moduli: Vec<i64>,
    pub target_moduli: Vec<i64>,
}

impl HomologyMap {
    /// The single entry of a map between rank-one groups.
    pub fn scalar(&self) -> Option<i64> {
        (self.matrix.rows() == 1 && self.matrix.cols() == 1).then(|| self.matrix.get(0, 0))
    }

    pub fn is_zero(&self) -> bool {
        self.matrix.is_zero()
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == IntegerMatrix::identity(self.matrix.rows())
    }

    /// `self ∘ first`.
    pub fn after(&self, first: &HomologyMap) -> Result<HomologyMap> {
        if first.target_moduli != self.source_moduli {
            return Err(Error::param("homology maps do not compose"));
        }
        let m = self.matrix.mul(&first.matrix)?;
        let cols: Vec<Vec<i64>> = (0..m.cols())
            .map(|j| reduce(&m.column(j), &self.target_moduli))
            .collect();
        Ok(HomologyMap {
            q: self.q,
            matrix: IntegerMatrix::from_columns(m.rows(), &cols)?,
            source_moduli: first.source_moduli.clone(),
            target_moduli: self.target_moduli.clone(),
        })
    }
}

/// `f_*` using precomputed homology of the domain and codomain.
pub fn induced_homology_map_with(
    f: &VertexMap<'_>,
    q: usize,
    hx: &Homology,
    hy: &Homology,
) -> Result<HomologyMap> {
    let fq = chain_map_between(f, hx.complex(), hy.complex(), q)?;
    let (gx, gy) = (hx.group(q), hy.group(q));
    let target_moduli = gy.moduli();
    let mut cols = Vec::with_capacity(gx.rank());
    for j in 0..gx.rank() {
        let image = fq.mul_vec(&gx.generators.column(j))?;
        cols.push(gy.class_of(&image)?);
    }
    Ok(HomologyMap {
        q,
        matrix: IntegerMatrix::from_columns(gy.rank(), &cols)?,
        source_moduli: gx.moduli(),
        target_moduli,
    })
}

pub fn induced_homology_map(f: &VertexMap<'_>, q: usize) -> Result<HomologyMap> {
    let hx = Homology::new(f.dom())?;
    if same_image(f.dom(), f.cod()) {
        return induced_homology_map_with(f, q, &hx, &hx);
    }
    induced_homology_map_with(f, q, &hx, &Homology::new(f.cod())?)
}

/// Equality of two maps between the same presentations, entrywise modulo
/// the target torsion.
pub fn homology_maps_equal(a: &HomologyMap, b: &HomologyMap) -> Result<bool> {
    if a.q != b.q
        || a.source_moduli != b.source_moduli
        || a.target_moduli != b.target_moduli
        || a.matrix.rows() != b.matrix.rows()
        || a.matrix.cols() != b.matrix.cols()
    {
        return Err(Error::param("homology maps have different presentations"));
    }
    Ok((0..a.matrix.cols()).all(|j| {
        reduce(&a.matrix.column(j), &a.target_moduli)
            == reduce(&b.matrix.column(j), &b.target_moduli)
    }))
}

/// `P : C_q(X) -> C_{q+1}(Y)`,
/// `P⟨x_0..x_q⟩ = Σ_j (-1)^j ⟨f(x_0)..f(x_j), g(x_j)..g(x_q)⟩`.
///
/// Requires `f` and `g` strongly homotopic in one step, which makes every
/// term a simplex. Then `∂P = g_# - f_# - P∂` holds exactly.
pub fn prism_operator(f: &VertexMap<'_>, g: &VertexMap<'_>, q: usize) -> Result<IntegerMatrix> {
    prism_with(
        f,
        g,
        q,
        &ChainComplex::new(f.dom()),
        &ChainComplex::new(f.cod()),
    )
}

pub fn prism_with(
    f: &VertexMap<'_>,
    g: &VertexMap<'_>,
    q: usize,
    cx: &ChainComplex,
    cy: &ChainComplex,
) -> Result<IntegerMatrix> {
    if !one_step_strong_homotopic(f, g)? {
        return Err(Error::Precondition(
            "prism operator needs maps strongly homotopic in one step".into(),
        ));
    }
    let mut m = IntegerMatrix::zeros(cy.rank(q + 1), cx.rank(q));
    for (col, s) in cx.basis(q).iter().enumerate() {
        for j in 0..=q {
            let mut t: Vec<usize> = s[..=j]
                .iter()
                .map(|&v| f.apply(v))
                .chain(s[j..].iter().map(|&v| g.apply(v)))
                .collect();
            if let Some(sign) = orient(&mut t) {
                let row = cy
                    .index_of(&t)
                    .expect("strong one-step pairs give simplices");
                let sign = if j % 2 == 0 { sign } else { -sign };
                m.set(row, col, m.get(row, col) + sign);
            }
        }
    }
    Ok(m)
}

/// Both sides of `∂_{q+1} P_q = g_# - f_# - P_{q-1} ∂_q` as matrices.
pub fn prism_identity_sides(
    f: &VertexMap<'_>,
    g: &VertexMap<'_>,
    q: usize,
) -> Result<(IntegerMatrix, IntegerMatrix)> {
    let cx = ChainComplex::new(f.dom());
    let cy = ChainComplex::new(f.cod());
    let lhs = cy.boundary(q + 1).mul(&prism_with(f, g, q, &cx, &cy)?)?;
    let mut rhs = chain_map_between(g, &cx, &cy, q)?.sub(&chain_map_between(f, &cx, &cy, q)?)?;
    if q > 0 {
        rhs = rhs.sub(&prism_with(f, g, q - 1, &cx, &cy)?.mul(&cx.boundary(q))?)?;
    }
    Ok((lhs, rhs))
}
