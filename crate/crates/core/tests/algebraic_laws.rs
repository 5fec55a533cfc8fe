use baker_gamma::algebraic::{cyclotomic, euler_phi, minpoly_sin, IntPolynomial};
use baker_gamma::qcore::elementary::sin_pi;
use baker_gamma::qcore::UnitRational;

fn divisors(n: u64) -> impl Iterator<Item = u64> {
    (1..=n).filter(move |d| n.is_multiple_of(*d))
}

#[test]
fn cyclotomic_product_is_x_pow_n_minus_one() {
    for n in 1..=200u64 {
        let prod = divisors(n).fold(IntPolynomial::one(), |acc, d| acc.mul(&cyclotomic(d).unwrap()));
        assert_eq!(prod, IntPolynomial::x_pow_minus_one(n as usize), "n = {n}");
    }
}

#[test]
fn degree_law_up_to_24() {
    for x in UnitRational::enumerate(24) {
        let q: u64 = x.denom().try_into().unwrap();
        let deg = minpoly_sin(&x).unwrap().degree() as u64;
        assert!(deg <= euler_phi(4 * q) / 2 + 1, "x = {x}: degree {deg}");
    }
}

#[test]
fn refined_root_meets_direct_sine_up_to_50() {
    let prec = 160;
    for x in UnitRational::enumerate(50) {
        let a = minpoly_sin(&x).unwrap();
        let r = a.refine(prec).unwrap();
        let direct = sin_pi(x.value(), prec).unwrap();
        assert!(r.overlaps(&direct), "x = {x}: {r:?} vs {direct:?}");
        assert!(a.is_positive());
    }
}

#[test]
fn sine_values_are_equal_exactly_on_mirror_pairs() {
    let xs = UnitRational::enumerate(24);
    let sines: Vec<_> = xs.iter().map(|x| minpoly_sin(x).unwrap()).collect();
    for (i, x) in xs.iter().enumerate() {
        for (j, y) in xs.iter().enumerate() {
            let mirror = y == x || *y == x.complement();
            assert_eq!(sines[i].alg_equal(&sines[j]), mirror, "x = {x}, y = {y}");
        }
    }
}

#[test]
fn tabled_minimal_polynomials() {
    let cases: [(i64, i64, &[i64]); 6] = [
        (1, 2, &[-1, 1]),
        (1, 6, &[-1, 2]),
        (1, 4, &[-1, 0, 2]),
        (1, 3, &[-3, 0, 4]),
        (1, 5, &[5, 0, -20, 0, 16]),
        (1, 10, &[-1, 2, 4]),
    ];
    for (p, q, coeffs) in cases {
        let a = minpoly_sin(&UnitRational::new(p, q).unwrap()).unwrap();
        assert_eq!(a.minpoly(), &IntPolynomial::from_i64(coeffs), "x = {p}/{q}");
    }
}
