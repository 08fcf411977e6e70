//! Floating-point scalar abstraction: every numerical routine in this crate
//! is generic over [`Scalar`], implemented for `f32` and `f64`.

use ndarray::{Array1, Array2, ScalarOperand};
use num_complex::Complex;
use num_traits::{Float, FloatConst, FromPrimitive, NumAssign, ToPrimitive};
use std::fmt::{Debug, Display};
use std::iter::{Product, Sum};

use crate::error::Error;

/// Real scalar type for all numerics: `f32` or `f64`.
///
/// Besides the usual float arithmetic this carries the one piece of dense
/// linear algebra the crate needs, a symmetric eigendecomposition, so that
/// callers stay generic while the backend dispatches to the LAPACK routine
/// of the right precision.
pub trait Scalar:
    Float
    + FloatConst
    + NumAssign
    + FromPrimitive
    + ToPrimitive
    + Sum
    + Product
    + ScalarOperand
    + Default
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Lossy conversion from an `f64` constant.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 constant representable in scalar type")
    }

    /// Widening (or identity) conversion to `f64`, mainly for output.
    fn f64(self) -> f64 {
        self.to_f64().expect("scalar convertible to f64")
    }

    /// Eigendecomposition of a symmetric matrix, reading the lower triangle.
    ///
    /// Returns the eigenvalues in ascending order; on return, **row** `k` of
    /// `a` holds the (orthonormal) eigenvector belonging to eigenvalue `k`.
    fn eigh_lower(a: &mut Array2<Self>) -> Result<Array1<Self>, Error>;

    /// Eigenvalues (ascending) of a complex Hermitian matrix, reading the
    /// lower triangle. `a` is a row-major square matrix and is destroyed.
    fn eigvalsh_complex(a: &mut Array2<Complex<Self>>) -> Result<Array1<Self>, Error>;
}

/// Ensure LAPACK runs single-threaded: all parallelism in this crate is at
/// the job level (rayon), and nested BLAS threading only adds overhead.
fn pin_blas_threads() {
    use std::sync::Once;
    static ONCE: Once = Once::new();
    ONCE.call_once(|| {
        extern "C" {
            fn openblas_set_num_threads(n: std::ffi::c_int);
        }
        unsafe { openblas_set_num_threads(1) };
    });
}

macro_rules! impl_scalar {
    ($t:ty, $syevd:path, $heevd:path, $c:ty) => {
        impl Scalar for $t {
            fn eigh_lower(a: &mut Array2<Self>) -> Result<Array1<Self>, Error> {
                pin_blas_threads();
                let n = a.nrows();
                if n != a.ncols() {
                    return Err(Error::numerical("eigh: matrix not square"));
                }
                if n == 0 {
                    return Ok(Array1::zeros(0));
                }
                let slice = a
                    .as_slice_mut()
                    .ok_or_else(|| Error::numerical("eigh: non-contiguous matrix"))?;
                let ni = n as i32;
                let mut w = vec![0 as $t; n];
                let mut info: i32 = 0;
                // Row-major symmetric input doubles as column-major input;
                // LAPACK leaves the eigenvectors column-major, i.e. row k of
                // the ndarray view is eigenvector k.
                // 'U' versus 'L' flips with the layout transpose.
                let jobz = b'V' as std::ffi::c_char;
                let uplo = b'U' as std::ffi::c_char;
                unsafe {
                    let mut work_q = [0 as $t];
                    let mut iwork_q = [0i32];
                    $syevd(
                        &jobz, &uplo, &ni, slice.as_mut_ptr(), &ni, w.as_mut_ptr(),
                        work_q.as_mut_ptr(), &-1, iwork_q.as_mut_ptr(), &-1, &mut info,
                    );
                    let lwork = work_q[0] as i32;
                    let liwork = iwork_q[0];
                    let mut work = vec![0 as $t; lwork.max(1) as usize];
                    let mut iwork = vec![0i32; liwork.max(1) as usize];
                    $syevd(
                        &jobz, &uplo, &ni, slice.as_mut_ptr(), &ni, w.as_mut_ptr(),
                        work.as_mut_ptr(), &lwork, iwork.as_mut_ptr(), &liwork, &mut info,
                    );
                }
                if info != 0 {
                    return Err(Error::numerical(format!("syevd failed: info = {info}")));
                }
                Ok(Array1::from_vec(w))
            }

            fn eigvalsh_complex(a: &mut Array2<Complex<Self>>) -> Result<Array1<Self>, Error> {
                pin_blas_threads();
                let n = a.nrows();
                if n != a.ncols() {
                    return Err(Error::numerical("eigvalsh: matrix not square"));
                }
                if n == 0 {
                    return Ok(Array1::zeros(0));
                }
                let slice = a
                    .as_slice_mut()
                    .ok_or_else(|| Error::numerical("eigvalsh: non-contiguous matrix"))?;
                let ni = n as i32;
                let mut w = vec![0 as $t; n];
                let mut info: i32 = 0;
                let jobz = b'N' as std::ffi::c_char;
                // Row-major Hermitian input is the conjugate of column-major,
                // which has the same (real) eigenvalues.
                let uplo = b'U' as std::ffi::c_char;
                unsafe {
                    let mut work_q = [Complex::<Self>::new(0.0, 0.0)];
                    let mut rwork_q = [0 as $t];
                    let mut iwork_q = [0i32];
                    $heevd(
                        &jobz, &uplo, &ni,
                        work_q.as_mut_ptr() as *mut $c, &ni, w.as_mut_ptr(),
                        work_q.as_mut_ptr() as *mut $c, &-1,
                        rwork_q.as_mut_ptr(), &-1, iwork_q.as_mut_ptr(), &-1, &mut info,
                    );
                    // query pass above only fills the workspace sizes
                    let lwork = work_q[0].re as i32;
                    let lrwork = rwork_q[0] as i32;
                    let liwork = iwork_q[0];
                    let mut work = vec![Complex::<Self>::new(0.0, 0.0); lwork.max(1) as usize];
                    let mut rwork = vec![0 as $t; lrwork.max(1) as usize];
                    let mut iwork = vec![0i32; liwork.max(1) as usize];
                    $heevd(
                        &jobz, &uplo, &ni,
                        slice.as_mut_ptr() as *mut $c, &ni, w.as_mut_ptr(),
                        work.as_mut_ptr() as *mut $c, &lwork,
                        rwork.as_mut_ptr(), &lrwork, iwork.as_mut_ptr(), &liwork, &mut info,
                    );
                }
                if info != 0 {
                    return Err(Error::numerical(format!("heevd failed: info = {info}")));
                }
                Ok(Array1::from_vec(w))
            }
        }
    };
}

impl_scalar!(f64, lapack_sys::dsyevd_, lapack_sys::zheevd_, lapack_sys::c_double_complex);
impl_scalar!(f32, lapack_sys::ssyevd_, lapack_sys::cheevd_, lapack_sys::c_float_complex);

/// Eigendecomposition of a symmetric matrix without consuming it.
///
/// Returns `(eigenvalues ascending, eigenvectors)` with eigenvector `k` in
/// row `k` of the second array.
pub fn eigh<T: Scalar>(a: &Array2<T>) -> Result<(Array1<T>, Array2<T>), Error> {
    let mut m = a.clone();
    let vals = T::eigh_lower(&mut m)?;
    Ok((vals, m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;
    use ndarray::array;

    #[test]
    fn eigh_2x2_known() {
        // [[2, 1], [1, 2]] has eigenvalues 1, 3 with vectors (1,-1)/sqrt2, (1,1)/sqrt2
        let a = array![[2.0_f64, 1.0], [1.0, 2.0]];
        let (vals, vecs) = eigh(&a).unwrap();
        assert_abs_diff_eq!(vals[0], 1.0, epsilon = 1e-12);
        assert_abs_diff_eq!(vals[1], 3.0, epsilon = 1e-12);
        let s = 1.0 / 2.0_f64.sqrt();
        assert_abs_diff_eq!(vecs[[0, 0]].abs(), s, epsilon = 1e-12);
        assert_abs_diff_eq!(vecs[[0, 1]].abs(), s, epsilon = 1e-12);
        assert!(vecs[[0, 0]] * vecs[[0, 1]] < 0.0, "row 0 is the (1,-1) vector");
        assert!(vecs[[1, 0]] * vecs[[1, 1]] > 0.0, "row 1 is the (1,1) vector");
    }

    #[test]
    fn eigh_reconstructs_matrix() {
        let a = array![
            [1.0_f64, 0.5, -0.25],
            [0.5, -2.0, 0.75],
            [-0.25, 0.75, 0.0],
        ];
        let (vals, vecs) = eigh(&a).unwrap();
        // A = V^T diag(w) V with row-eigenvector convention
        for i in 0..3 {
            for j in 0..3 {
                let mut s = 0.0;
                for k in 0..3 {
                    s += vecs[[k, i]] * vals[k] * vecs[[k, j]];
                }
                assert_abs_diff_eq!(s, a[[i, j]], epsilon = 1e-12);
            }
        }
    }

    #[test]
    fn eigh_f32_works() {
        let a = array![[2.0_f32, 1.0], [1.0, 2.0]];
        let (vals, _) = eigh(&a).unwrap();
        assert_abs_diff_eq!(vals[0], 1.0, epsilon = 1e-5);
        assert_abs_diff_eq!(vals[1], 3.0, epsilon = 1e-5);
    }

    #[test]
    fn eigvalsh_complex_hermitian() {
        use num_complex::Complex;
        // [[1, i], [-i, 1]] has eigenvalues 0 and 2
        let mut a = array![
            [Complex::new(1.0_f64, 0.0), Complex::new(0.0, 1.0)],
            [Complex::new(0.0, -1.0), Complex::new(1.0, 0.0)],
        ];
        let vals = f64::eigvalsh_complex(&mut a).unwrap();
        assert_abs_diff_eq!(vals[0], 0.0, epsilon = 1e-12);
        assert_abs_diff_eq!(vals[1], 2.0, epsilon = 1e-12);
    }
}
