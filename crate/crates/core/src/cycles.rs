//! Selfmaps of the digital cycle `C_n` (points `c_0..c_{n-1}`, indices
//! mod `n`): rotations `r_d(c_i) = c_{i+d}`, the flip `l(c_i) = c_{-i}`, and
//! their classification for `n > 4`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::HomologyMap;
use crate::image::DigitalImage;
use crate::map::VertexMap;

fn cycle_len(cn: &DigitalImage) -> Result<usize> {
    let n = cn.len();
    if n < 4 {
        return Err(Error::param(format!("cycle maps need n >= 4, got {n}")));
    }
    let standard = cn
        .vertices()
        .all(|i| cn.degree(i) == 2 && cn.is_adjacent(i, (i + 1) % n));
    if !standard {
        return Err(Error::param(
            "image is not C_n with c_i adjacent to c_(i+1)",
        ));
    }
    Ok(n)
}

fn residue(d: i64, n: usize) -> usize {
    d.rem_euclid(n as i64) as usize
}

pub fn rotation_map(cn: &DigitalImage, d: i64) -> Result<VertexMap<'_>> {
    let n = cycle_len(cn)?;
    let d = residue(d, n);
    VertexMap::new(cn, cn, (0..n).map(|i| (i + d) % n).collect())
}

pub fn flip_map(cn: &DigitalImage) -> Result<VertexMap<'_>> {
    let n = cycle_len(cn)?;
    VertexMap::new(cn, cn, (0..n).map(|i| (n - i) % n).collect())
}

/// `r_d ∘ l`, i.e. `c_i ↦ c_{d-i}`.
pub fn rotated_flip_map(cn: &DigitalImage, d: i64) -> Result<VertexMap<'_>> {
    let n = cycle_len(cn)?;
    let d = residue(d, n);
    VertexMap::new(cn, cn, (0..n).map(|i| (d + n - i) % n).collect())
}

pub fn constant_map(cn: &DigitalImage, target: usize) -> Result<VertexMap<'_>> {
    cycle_len(cn)?;
    VertexMap::constant(cn, cn, target)
}

/// The three homotopy classes of selfmaps of `C_n`, `n > 4`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "class", content = "d")]
pub enum CycleClass {
    /// `f = r_d`.
    Identity(usize),
    /// `f = r_d ∘ l`.
    Flip(usize),
    Constant,
}

pub fn classify_cycle_selfmap(f: &VertexMap<'_>) -> Result<CycleClass> {
    let cn = f.dom();
    let n = cycle_len(cn)?;
    if !std::ptr::eq(cn, f.cod()) && cn != f.cod() {
        return Err(Error::param("not a selfmap"));
    }
    if n <= 4 {
        return Err(Error::OutOfScope(format!(
            "classification needs n > 4, got n = {n}"
        )));
    }
    f.require_continuous("f")?;
    let v = f.values();
    let d = v[0];
    if (0..n).all(|i| v[i] == (i + d) % n) {
        Ok(CycleClass::Identity(d))
    } else if (0..n).all(|i| v[i] == (d + n - i) % n) {
        Ok(CycleClass::Flip(d))
    } else {
        Ok(CycleClass::Constant)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ExpectedInduced {
    Identity,
    NegativeIdentity,
    Zero,
}

impl ExpectedInduced {
    /// Compares with a computed map on `H_q(C_n)`.
    pub fn matches(self, m: &HomologyMap) -> bool {
        let k = m.matrix.rows();
        if k != m.matrix.cols() {
            return false;
        }
        (0..k).all(|i| {
            (0..k).all(|j| {
                let want = match (self, i == j) {
                    (ExpectedInduced::Identity, true) => 1,
                    (ExpectedInduced::NegativeIdentity, true) => -1,
                    _ => 0,
                };
                m.matrix.get(i, j) == want
            })
        })
    }
}

/// The induced map on `H_q(C_n)` predicted by the class of `f`.
pub fn expected_induced(f: &VertexMap<'_>, q: usize) -> Result<ExpectedInduced> {
    let class = classify_cycle_selfmap(f)?;
    Ok(match (q, class) {
        (0, _) => ExpectedInduced::Identity,
        (1, CycleClass::Identity(_)) => ExpectedInduced::Identity,
        (1, CycleClass::Flip(_)) => ExpectedInduced::NegativeIdentity,
        _ => ExpectedInduced::Zero,
    })
}
