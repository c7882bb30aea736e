//! Jacobi elliptic functions by the descending Landen (AGM) scheme.
//!
//! The second argument is the parameter `m = k²`.

/// `(sn, cn, dn)` of `u` with parameter `m ≥ 0`. Returns NaNs for `m < 0`.
pub fn jacobi_elliptic(u: f64, m: f64) -> (f64, f64, f64) {
    if !(m >= 0.0) {
        return (f64::NAN, f64::NAN, f64::NAN);
    }
    if m == 0.0 {
        return (u.sin(), u.cos(), 1.0);
    }
    if m == 1.0 {
        let sech = 1.0 / u.cosh();
        return (u.tanh(), sech, sech);
    }
    if m > 1.0 {
        // reciprocal parameter: sn(u|m) = sn(ku|1/m)/k, cn(u|m) = dn(ku|1/m),
        // dn(u|m) = cn(ku|1/m), k = √m
        let k = m.sqrt();
        let (s, c, d) = agm(u * k, 1.0 / m);
        return (s / k, d, c);
    }
    agm(u, m)
}

pub fn jacobi_cn(u: f64, m: f64) -> f64 {
    jacobi_elliptic(u, m).1
}

pub fn jacobi_sn(u: f64, m: f64) -> f64 {
    jacobi_elliptic(u, m).0
}

pub fn jacobi_dn(u: f64, m: f64) -> f64 {
    jacobi_elliptic(u, m).2
}

const MAX_STEPS: usize = 32;

fn agm(u: f64, m: f64) -> (f64, f64, f64) {
    debug_assert!(m > 0.0 && m < 1.0);
    let mut a = [0.0f64; MAX_STEPS + 1];
    let mut c = [0.0f64; MAX_STEPS + 1];
    a[0] = 1.0;
    c[0] = m.sqrt();
    let mut b = (1.0 - m).sqrt();
    let mut n = 0;
    while c[n].abs() > f64::EPSILON * a[n] && n < MAX_STEPS {
        a[n + 1] = 0.5 * (a[n] + b);
        c[n + 1] = 0.5 * (a[n] - b);
        b = (a[n] * b).sqrt();
        n += 1;
    }
    let mut phi = 2f64.powi(n as i32) * a[n] * u;
    for j in (1..=n).rev() {
        phi = 0.5 * (phi + (c[j] / a[j] * phi.sin()).clamp(-1.0, 1.0).asin());
    }
    let (sn, cn) = phi.sin_cos();
    (sn, cn, (1.0 - m * sn * sn).sqrt())
}
