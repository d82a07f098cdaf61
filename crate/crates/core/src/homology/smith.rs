//! Smith normal form with the transforming matrices and their inverses,
//! over overflow-checked `i64` or arbitrary-precision integers.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::{BigInt, Sign};

use super::matrix::IntegerMatrix;
use crate::error::{Error, Result};

/// Integers the elimination runs over.
trait Entry: Clone + PartialEq + fmt::Debug {
    fn from_i64(x: i64) -> Self;
    fn is_zero(&self) -> bool;
    fn is_negative(&self) -> bool;
    fn cmp_abs(&self, other: &Self) -> Ordering;
    fn neg(&self) -> Self;
    /// `a*x + b*y`.
    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Result<Self>;
    /// `q` minimizing `|x - q*p|`, for `p != 0`.
    fn nearest_quotient(x: &Self, p: &Self) -> Self;
    fn divides(p: &Self, x: &Self) -> bool;
}

fn overflow() -> Error {
    Error::Overflow("matrix arithmetic")
}

impl Entry for i64 {
    fn from_i64(x: i64) -> Self {
        x
    }

    fn is_zero(&self) -> bool {
        *self == 0
    }

    fn is_negative(&self) -> bool {
        *self < 0
    }

    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.unsigned_abs().cmp(&other.unsigned_abs())
    }

    fn neg(&self) -> Self {
        -self
    }

    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Result<Self> {
        let ax = a.checked_mul(*x).ok_or_else(overflow)?;
        let by = b.checked_mul(*y).ok_or_else(overflow)?;
        ax.checked_add(by).ok_or_else(overflow)
    }

    fn nearest_quotient(x: &Self, p: &Self) -> Self {
        let (q, r) = (x.div_euclid(*p), x.rem_euclid(*p));
        if r > p.unsigned_abs() as i64 - r {
            q + p.signum()
        } else {
            q
        }
    }

    fn divides(p: &Self, x: &Self) -> bool {
        x % p == 0
    }
}

impl Entry for BigInt {
    fn from_i64(x: i64) -> Self {
        BigInt::from(x)
    }

    fn is_zero(&self) -> bool {
        self.sign() == Sign::NoSign
    }

    fn is_negative(&self) -> bool {
        self.sign() == Sign::Minus
    }

    fn cmp_abs(&self, other: &Self) -> Ordering {
        self.magnitude().cmp(other.magnitude())
    }

    fn neg(&self) -> Self {
        -self
    }

    fn combine(a: &Self, x: &Self, b: &Self, y: &Self) -> Result<Self> {
        Ok(a * x + b * y)
    }

    fn nearest_quotient(x: &Self, p: &Self) -> Self {
        // Euclidean division (remainder in [0, |p|)), then round to nearest
        let mut q = x / p;
        let mut r = x - &q * p;
        if r.is_negative() {
            if p.is_negative() {
                q += 1;
                r -= p;
            } else {
                q -= 1;
                r += p;
            }
        }
        let twice: BigInt = &r * 2;
        if twice.magnitude() > p.magnitude() {
            q + if p.is_negative() { -1 } else { 1 }
        } else {
            q
        }
    }

    fn divides(p: &Self, x: &Self) -> bool {
        (x % p).is_zero()
    }
}

/// Row-major matrix over an [`Entry`] type.
#[derive(Clone, PartialEq, Eq)]
pub struct Dense<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

/// Arbitrary-precision integer matrix.
pub type BigIntMatrix = Dense<BigInt>;

impl<T: Clone> Dense<T> {
    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.data[i * self.cols + j]
    }

    pub fn to_rows(&self) -> Vec<Vec<T>> {
        self.data
            .chunks(self.cols.max(1))
            .take(self.rows)
            .map(<[T]>::to_vec)
            .collect()
    }
}

impl<T: fmt::Debug + Clone> fmt::Debug for Dense<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}x{}{:?}", self.rows, self.cols, self.to_rows())
    }
}

#[allow(private_bounds)]
impl<T: Entry> Dense<T> {
    fn identity(n: usize) -> Self {
        let mut data = vec![T::from_i64(0); n * n];
        for i in 0..n {
            data[i * n + i] = T::from_i64(1);
        }
        Dense {
            rows: n,
            cols: n,
            data,
        }
    }

    fn from_integer(m: &IntegerMatrix) -> Self {
        Dense {
            rows: m.rows(),
            cols: m.cols(),
            data: m.to_rows().into_iter().flatten().map(T::from_i64).collect(),
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for j in 0..self.cols {
                self.data.swap(a * self.cols + j, b * self.cols + j);
            }
        }
    }

    fn swap_cols(&mut self, a: usize, b: usize) {
        if a != b {
            for i in 0..self.rows {
                self.data.swap(i * self.cols + a, i * self.cols + b);
            }
        }
    }

    fn negate(&mut self, row: bool, k: usize) {
        let idx: Vec<usize> = if row {
            (0..self.cols).map(|j| k * self.cols + j).collect()
        } else {
            (0..self.rows).map(|i| i * self.cols + k).collect()
        };
        for i in idx {
            self.data[i] = self.data[i].neg();
        }
    }

    /// Replaces lines `a`, `b` (rows if `row`, else columns) by
    /// `(p*a + q*b, r*a + s*b)`.
    fn mix(&mut self, row: bool, a: usize, b: usize, [p, q, r, s]: &[T; 4]) -> Result<()> {
        let len = if row { self.cols } else { self.rows };
        for k in 0..len {
            let (ia, ib) = if row {
                (a * self.cols + k, b * self.cols + k)
            } else {
                (k * self.cols + a, k * self.cols + b)
            };
            let (x, y) = (self.data[ia].clone(), self.data[ib].clone());
            self.data[ia] = T::combine(p, &x, q, &y)?;
            self.data[ib] = T::combine(r, &x, s, &y)?;
        }
        Ok(())
    }
}

impl BigIntMatrix {
    pub fn from_integer_matrix(m: &IntegerMatrix) -> Self {
        Dense::from_integer(m)
    }

    pub fn identity_matrix(n: usize) -> Self {
        Dense::identity(n)
    }

    pub fn mul(&self, other: &BigIntMatrix) -> Result<BigIntMatrix> {
        if self.cols != other.rows {
            return Err(Error::param(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let mut data = vec![BigInt::from(0); self.rows * other.cols];
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    data[i * other.cols + j] += a * other.get(k, j);
                }
            }
        }
        Ok(Dense {
            rows: self.rows,
            cols: other.cols,
            data,
        })
    }

    pub fn is_diagonal(&self) -> bool {
        (0..self.rows).all(|i| (0..self.cols).all(|j| i == j || self.get(i, j).is_zero()))
    }

    /// Converts back, failing if an entry does not fit in `i64`.
    pub fn to_integer_matrix(&self) -> Result<IntegerMatrix> {
        let rows: Vec<Vec<i64>> = self
            .to_rows()
            .iter()
            .map(|r| {
                r.iter()
                    .map(|x| i64::try_from(x).map_err(|_| overflow()))
                    .collect()
            })
            .collect::<Result<_>>()?;
        IntegerMatrix::from_rows(self.cols, &rows)
    }
}

struct Tracker<T> {
    d: Dense<T>,
    u: Dense<T>,
    u_inv: Dense<T>,
    v: Dense<T>,
    v_inv: Dense<T>,
}

impl<T: Entry> Tracker<T> {
    /// Adds `c` times row `src` to row `dst`.
    fn row_add(&mut self, dst: usize, src: usize, c: T) -> Result<()> {
        let (one, zero) = (T::from_i64(1), T::from_i64(0));
        let op = [one.clone(), c.clone(), zero.clone(), one.clone()];
        self.d.mix(true, dst, src, &op)?;
        self.u.mix(true, dst, src, &op)?;
        // U^-1 picks up the inverse operation on the right
        self.u_inv
            .mix(false, dst, src, &[one.clone(), zero, c.neg(), one])
    }

    /// Adds `c` times column `src` to column `dst`.
    fn col_add(&mut self, dst: usize, src: usize, c: T) -> Result<()> {
        let (one, zero) = (T::from_i64(1), T::from_i64(0));
        let op = [one.clone(), c.clone(), zero.clone(), one.clone()];
        self.d.mix(false, dst, src, &op)?;
        self.v.mix(false, dst, src, &op)?;
        self.v_inv
            .mix(true, dst, src, &[one.clone(), zero, c.neg(), one])
    }

    fn row_swap(&mut self, a: usize, b: usize) {
        self.d.swap_rows(a, b);
        self.u.swap_rows(a, b);
        self.u_inv.swap_cols(a, b);
    }

    fn col_swap(&mut self, a: usize, b: usize) {
        self.d.swap_cols(a, b);
        self.v.swap_cols(a, b);
        self.v_inv.swap_rows(a, b);
    }

    fn row_negate(&mut self, i: usize) {
        self.d.negate(true, i);
        self.u.negate(true, i);
        self.u_inv.negate(false, i);
    }
}

fn eliminate<T: Entry>(d: Dense<T>) -> Result<Tracker<T>> {
    let (rows, cols) = (d.rows, d.cols);
    let mut t = Tracker {
        d,
        u: Dense::identity(rows),
        u_inv: Dense::identity(rows),
        v: Dense::identity(cols),
        v_inv: Dense::identity(cols),
    };
    for p in 0..rows.min(cols) {
        loop {
            // pivot: least nonzero absolute value in the trailing block
            let mut best: Option<(usize, usize)> = None;
            for i in p..rows {
                for j in p..cols {
                    let x = t.d.get(i, j);
                    if !x.is_zero()
                        && best.is_none_or(|(a, b)| x.cmp_abs(t.d.get(a, b)) == Ordering::Less)
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((pi, pj)) = best else {
                return Ok(t);
            };
            t.row_swap(p, pi);
            t.col_swap(p, pj);
            let pivot = t.d.get(p, p).clone();
            for i in p + 1..rows {
                let q = T::nearest_quotient(t.d.get(i, p), &pivot);
                if !q.is_zero() {
                    t.row_add(i, p, q.neg())?;
                }
            }
            for j in p + 1..cols {
                let q = T::nearest_quotient(t.d.get(p, j), &pivot);
                if !q.is_zero() {
                    t.col_add(j, p, q.neg())?;
                }
            }
            let clean = (p + 1..rows).all(|i| t.d.get(i, p).is_zero())
                && (p + 1..cols).all(|j| t.d.get(p, j).is_zero());
            if !clean {
                continue;
            }
            let bad =
                (p + 1..rows).find(|&i| (p + 1..cols).any(|j| !T::divides(&pivot, t.d.get(i, j))));
            match bad {
                // pull the offending row into row p; the next pass lowers the pivot
                Some(i) => t.row_add(p, i, T::from_i64(1))?,
                None => break,
            }
        }
        if t.d.get(p, p).is_negative() {
            t.row_negate(p);
        }
    }
    Ok(t)
}

/// `U * M * V = D` with `U`, `V` unimodular and `D` diagonal, nonnegative,
/// each diagonal entry dividing the next. The inverses are kept as well.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithForm {
    pub u: IntegerMatrix,
    pub u_inv: IntegerMatrix,
    pub d: IntegerMatrix,
    pub v: IntegerMatrix,
    pub v_inv: IntegerMatrix,
}

impl SmithForm {
    /// Nonzero diagonal entries, in order.
    pub fn invariant_factors(&self) -> Vec<i64> {
        (0..self.d.rows().min(self.d.cols()))
            .map(|i| self.d.get(i, i))
            .take_while(|&x| x != 0)
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn to_integer(m: Dense<i64>) -> IntegerMatrix {
    let rows = m.to_rows();
    IntegerMatrix::from_rows(m.cols, &rows).expect("dimensions are consistent")
}

/// Smith normal form in checked `i64`; fails with [`Error::Overflow`] if
/// an intermediate entry does not fit. Transform entries can grow quickly
/// on dense inputs; [`exact_smith_normal_form`] never overflows.
pub fn smith_normal_form(m: &IntegerMatrix) -> Result<SmithForm> {
    let t = eliminate(Dense::<i64>::from_integer(m))?;
    Ok(SmithForm {
        u: to_integer(t.u),
        u_inv: to_integer(t.u_inv),
        d: to_integer(t.d),
        v: to_integer(t.v),
        v_inv: to_integer(t.v_inv),
    })
}

/// [`SmithForm`] with arbitrary-precision entries.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExactSmithForm {
    pub u: BigIntMatrix,
    pub u_inv: BigIntMatrix,
    pub d: BigIntMatrix,
    pub v: BigIntMatrix,
    pub v_inv: BigIntMatrix,
}

impl ExactSmithForm {
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        (0..self.d.rows.min(self.d.cols))
            .map(|i| self.d.get(i, i).clone())
            .take_while(|x| !x.is_zero())
            .collect()
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

/// Smith normal form with arbitrary-precision arithmetic. Runs the same
/// elimination as [`smith_normal_form`], so where both succeed they agree.
pub fn exact_smith_normal_form(m: &IntegerMatrix) -> ExactSmithForm {
    let t = eliminate(Dense::<BigInt>::from_integer(m)).expect("big integers do not overflow");
    ExactSmithForm {
        u: t.u,
        u_inv: t.u_inv,
        d: t.d,
        v: t.v,
        v_inv: t.v_inv,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn check(m: &IntegerMatrix) -> SmithForm {
        let s = smith_normal_form(m).unwrap();
        assert_eq!(s.u.mul(m).unwrap().mul(&s.v).unwrap(), s.d);
        assert_eq!(
            s.u.mul(&s.u_inv).unwrap(),
            IntegerMatrix::identity(m.rows())
        );
        assert_eq!(
            s.v.mul(&s.v_inv).unwrap(),
            IntegerMatrix::identity(m.cols())
        );
        for i in 0..s.d.rows() {
            for j in 0..s.d.cols() {
                if i != j {
                    assert_eq!(s.d.get(i, j), 0);
                }
            }
        }
        let f = s.invariant_factors();
        assert!(f.iter().all(|&x| x > 0));
        assert!(f.windows(2).all(|w| w[1] % w[0] == 0));
        s
    }

    #[test]
    fn small_examples() {
        let id = IntegerMatrix::identity(3);
        assert_eq!(check(&id).d, id);
        let z = IntegerMatrix::zeros(2, 3);
        assert_eq!(check(&z).d, z);
        let m = IntegerMatrix::from_rows(2, &[vec![2, 4], vec![6, 8]]).unwrap();
        assert_eq!(check(&m).invariant_factors(), vec![2, 4]);
        let m = IntegerMatrix::from_rows(3, &[vec![2, 0, 0], vec![0, 3, 0]]).unwrap();
        assert_eq!(check(&m).invariant_factors(), vec![1, 6]);
        let empty = IntegerMatrix::zeros(0, 4);
        assert_eq!(check(&empty).rank(), 0);
    }

    #[test]
    fn nearest_quotients() {
        for x in -30i64..=30 {
            for p in (-9i64..=9).filter(|&p| p != 0) {
                let q = i64::nearest_quotient(&x, &p);
                assert!(2 * (x - q * p).abs() <= p.abs(), "{x} {p}");
                let big = BigInt::nearest_quotient(&BigInt::from(x), &BigInt::from(p));
                assert_eq!(big, BigInt::from(q), "{x} {p}");
                assert_eq!(
                    i64::divides(&p, &x),
                    BigInt::divides(&BigInt::from(p), &BigInt::from(x))
                );
            }
        }
    }

    #[test]
    fn exact_form_agrees_and_survives_growth() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        let mut overflowed = 0;
        for _ in 0..300 {
            let (r, c) = (rng.gen_range(1..=8), rng.gen_range(1..=8));
            let rows: Vec<Vec<i64>> = (0..r)
                .map(|_| (0..c).map(|_| rng.gen_range(-9..=9)).collect())
                .collect();
            let m = IntegerMatrix::from_rows(c, &rows).unwrap();
            let e = exact_smith_normal_form(&m);
            let big = BigIntMatrix::from_integer_matrix(&m);
            assert_eq!(e.u.mul(&big).unwrap().mul(&e.v).unwrap(), e.d);
            assert_eq!(e.u.mul(&e.u_inv).unwrap(), BigIntMatrix::identity_matrix(r));
            assert_eq!(e.v.mul(&e.v_inv).unwrap(), BigIntMatrix::identity_matrix(c));
            assert!(e.d.is_diagonal());
            match smith_normal_form(&m) {
                Ok(s) => assert_eq!(e.d.to_integer_matrix().unwrap(), s.d),
                Err(Error::Overflow(_)) => overflowed += 1,
                Err(other) => panic!("{other}"),
            }
        }
        assert!(overflowed < 30);
    }
}
