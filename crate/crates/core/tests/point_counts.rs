use fdq_core::motive::point_count;
use fdq_core::root_datum::builtin_datum;
use num_bigint::BigInt;
use num_rational::BigRational;

fn det_mod(m: &[i64], n: usize, p: i64) -> i64 {
    match n {
        2 => (m[0] * m[3] - m[1] * m[2]).rem_euclid(p),
        3 => (m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6])
            + m[2] * (m[3] * m[7] - m[4] * m[6]))
            .rem_euclid(p),
        _ => unreachable!(),
    }
}

/// `(#GL_n(F_p), #SL_n(F_p))` by enumerating all matrices.
fn brute_force(n: usize, p: i64) -> (u64, u64) {
    let cells = n * n;
    let total = p.pow(cells as u32);
    let (mut gl, mut sl) = (0, 0);
    let mut m = vec![0i64; cells];
    for code in 0..total {
        let mut c = code;
        for x in m.iter_mut() {
            *x = c % p;
            c /= p;
        }
        match det_mod(&m, n, p) {
            0 => {}
            1 => {
                gl += 1;
                sl += 1;
            }
            _ => gl += 1,
        }
    }
    (gl, sl)
}

fn polynomial_count(name: &str, p: i64) -> BigRational {
    point_count(&builtin_datum(name).unwrap()).unwrap().eval(p).unwrap()
}

fn int(n: u64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[test]
fn gl2_and_sl2_over_small_fields() {
    for p in [2, 3] {
        let (gl, sl) = brute_force(2, p);
        assert_eq!(polynomial_count("GL2", p), int(gl), "GL2(F_{p})");
        assert_eq!(polynomial_count("SL2", p), int(sl), "SL2(F_{p})");
    }
    assert_eq!(brute_force(2, 3).0, 48);
}

#[test]
fn sl3_and_gl3_over_f2() {
    let (gl, sl) = brute_force(3, 2);
    assert_eq!(gl, 168);
    assert_eq!(polynomial_count("SL3", 2), int(sl));
    assert_eq!(polynomial_count("GL3", 2), int(gl));
}

#[test]
fn isogenous_groups_share_counts() {
    // split groups with the same root system have the same number of points
    for p in [2, 3, 5] {
        assert_eq!(polynomial_count("SL3", p), polynomial_count("PGL3", p));
        assert_eq!(polynomial_count("B3sc", p), polynomial_count("B3", p));
    }
}
