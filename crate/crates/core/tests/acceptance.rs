//! End-to-end acceptance checks. Each test covers one headline guarantee of
//! the crate and prints a single PASS line on success; the harness reports
//! FAIL through the usual panic on any mismatch.

use num_bigint::BigInt;
use quiver_comb::{
    color_counts, common_core, core_from_k, core_weight, decompose, dim_quiver_variety,
    enumerate_p_w_v, enumerate_partitions, equivariant_integral, euler_generating, gottsche,
    hilbert_series_z, is_core, rank_one_closed_form, rational_functions_agree, reconstruct,
    tangent_character, theta_core, verify_identity_a6, z_bruteforce, z_closed, z_quot_closed,
    ale_charts, plane_chart, CharacterSum, ColorSpec, DimVector, Exponents, LinearForm, MultiPoly,
    Partition, QSeries, RationalFunction, VerifyMode, WeightMonomial,
};

fn p(parts: &[u32]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn wm(t1: i64, t2: i64, alpha: usize, beta: usize) -> WeightMonomial {
    WeightMonomial { t1, t2, alpha, beta }
}

#[test]
fn acceptance_01_staircase_decomposition_golden() {
    let cq = decompose(&p(&[3, 2, 1]), 5).unwrap();
    assert_eq!(
        cq.quotient,
        vec![
            Partition::empty(),
            Partition::empty(),
            p(&[1]),
            Partition::empty(),
            Partition::empty()
        ]
    );
    assert_eq!(cq.core, p(&[1]));
    assert_eq!(reconstruct(&cq.core, &cq.quotient, 5).unwrap(), p(&[3, 2, 1]));
    println!("PASS: 5-quotient of (3,2,1) and its reconstruction");
}

#[test]
fn acceptance_02_roundtrip_and_weight_identity() {
    for n in 0..=18u64 {
        for y in enumerate_partitions(n) {
            for l in 2..=5u32 {
                let cq = decompose(&y, l).unwrap();
                assert_eq!(
                    reconstruct(&cq.core, &cq.quotient, l).unwrap(),
                    y,
                    "roundtrip failed for {y} at l={l}"
                );
                assert_eq!(
                    y.weight(),
                    cq.core.weight() + l as u64 * cq.quotient_weight(),
                    "weight identity failed for {y} at l={l}"
                );
            }
        }
    }
    println!("PASS: decompose/reconstruct roundtrip and weight identity, |Y| <= 18, l in 2..=5");
}

#[test]
fn acceptance_03_core_weight_formula() {
    for l in 2..=4u32 {
        let dims = l as usize;
        let mut k = vec![-3i64; dims - 1];
        loop {
            let last: i64 = -k.iter().sum::<i64>();
            if last.abs() <= 3 {
                let mut full = k.clone();
                full.push(last);
                let core = core_from_k(&full, l).unwrap();
                assert_eq!(
                    core_weight(&full, l).unwrap(),
                    core.weight(),
                    "k={full:?} l={l}"
                );
            }
            let mut i = 0;
            loop {
                if i == dims - 1 {
                    k = vec![-3; dims - 1];
                    break;
                }
                k[i] += 1;
                if k[i] <= 3 {
                    break;
                }
                k[i] = -3;
                i += 1;
            }
            if k.iter().all(|&x| x == -3) {
                break;
            }
        }
    }
    println!("PASS: closed core-weight formula, |k_i| <= 3, l <= 4");
}

#[test]
fn acceptance_04_rank_two_fixed_points_characters_integral() {
    let spec = ColorSpec::new(2, vec![0, 1]).unwrap();
    let v = DimVector(vec![1, 1]);
    let e = Partition::empty();
    let points = enumerate_p_w_v(&spec, &v).unwrap();
    let expected_points = vec![
        vec![p(&[2]), e.clone()],
        vec![p(&[1, 1]), e.clone()],
        vec![p(&[1]), p(&[1])],
        vec![e.clone(), p(&[2])],
        vec![e.clone(), p(&[1, 1])],
    ];
    assert_eq!(points, expected_points);

    let goldens: Vec<(Vec<Partition>, Vec<WeightMonomial>)> = vec![
        (
            vec![p(&[2]), e.clone()],
            vec![wm(1, -1, 1, 1), wm(0, 2, 1, 1), wm(0, -1, 2, 1), wm(1, 2, 1, 2)],
        ),
        (
            vec![p(&[1, 1]), e.clone()],
            vec![wm(-1, 1, 1, 1), wm(2, 0, 1, 1), wm(-1, 0, 2, 1), wm(2, 1, 1, 2)],
        ),
        (
            vec![e.clone(), p(&[2])],
            vec![wm(0, 2, 2, 2), wm(1, -1, 2, 2), wm(0, -1, 1, 2), wm(1, 2, 2, 1)],
        ),
        (
            vec![e.clone(), p(&[1, 1])],
            vec![wm(-1, 1, 2, 2), wm(2, 0, 2, 2), wm(-1, 0, 1, 2), wm(2, 1, 2, 1)],
        ),
        (
            vec![p(&[1]), p(&[1])],
            vec![wm(0, 1, 2, 1), wm(1, 0, 2, 1), wm(0, 1, 1, 2), wm(1, 0, 1, 2)],
        ),
    ];
    for (ys, expected) in goldens {
        let got = tangent_character(&ys, &spec).unwrap();
        assert!(
            got.same_multiset(&CharacterSum { terms: expected }),
            "character mismatch at {ys:?}"
        );
    }

    // (4 e1^2 + 10 e1 e2 + 4 e2^2 - (a1 - a2)^2) /
    // (e1 e2 E(1,-1,2,1) E(1,-1,1,2) E(-1,1,2,1) E(-1,1,1,2)),
    // E(x,y,z,w) = x a1 + y a2 + z e1 + w e2
    let nv = 4usize;
    let var = |i| MultiPoly::var(nv, i);
    let (e1, e2, a1, a2) = (var(0), var(1), var(2), var(3));
    let diff = a1.sub(&a2);
    let num = e1
        .mul(&e1)
        .scale(&BigInt::from(4))
        .add(&e1.mul(&e2).scale(&BigInt::from(10)))
        .add(&e2.mul(&e2).scale(&BigInt::from(4)))
        .sub(&diff.mul(&diff));
    let ee = |x: i64, y: i64, z: i64, w: i64| LinearForm::new(z, w, vec![x, y]).to_poly(nv);
    let den = e1
        .mul(&e2)
        .mul(&ee(1, -1, 2, 1))
        .mul(&ee(1, -1, 1, 2))
        .mul(&ee(-1, 1, 2, 1))
        .mul(&ee(-1, 1, 1, 2));
    let expected = RationalFunction::new(num, den);
    let got = equivariant_integral(&spec, &v).unwrap();
    assert_eq!(got, expected);
    assert!(rational_functions_agree(&got, &expected, 0x1234_5678, 10));
    println!("PASS: rank-2 fixed points, tangent characters, and integral goldens");
}

#[test]
fn acceptance_05_hook_localization_identity() {
    for l in 2..=3u32 {
        for j in 0..l {
            let spec = ColorSpec::rank_one(l, j).unwrap();
            // every admissible color vector: core of weight <= 4 plus n
            // copies of the all-ones vector, quotient weight n <= 4
            for cw in 0..=4u64 {
                for core in enumerate_partitions(cw) {
                    if !is_core(&core, l).unwrap() {
                        continue;
                    }
                    let vc = color_counts(std::slice::from_ref(&core), &spec).unwrap();
                    for n in 0..=4u64 {
                        let v =
                            DimVector(vc.0.iter().map(|&x| x + n).collect());
                        let mode = if n <= 3 {
                            VerifyMode::Exact
                        } else {
                            VerifyMode::Random { seed: 0xA6, points: 5 }
                        };
                        assert!(
                            verify_identity_a6(l, j, &v, mode).unwrap(),
                            "l={l} j={j} core={core} n={n}"
                        );
                    }
                }
            }
        }
    }
    println!("PASS: hook localization identity, l in {{2,3}}, quotient weight <= 4");
}

#[test]
fn acceptance_06_closed_form_series() {
    for l in 2..=3u32 {
        for j in 0..l {
            let nq = 12i64;
            let brute = z_bruteforce(l, j, nq).unwrap();
            let closed = theta_core(l, j, nq).unwrap().mul(&z_quot_closed(l, nq).unwrap());
            assert_eq!(brute, closed, "l={l} j={j}");
        }
    }
    println!("PASS: brute-force series equals theta x quotient closed form to q-degree 12");
}

#[test]
fn acceptance_07_euler_counts() {
    let l = 2u32;
    let ws: Vec<Vec<u64>> = vec![vec![1, 0], vec![0, 1], vec![1, 1], vec![2, 0], vec![0, 2]];
    for wv in ws {
        let w = DimVector(wv.clone());
        let spec = ColorSpec::from_w(l, &w).unwrap();
        let series = euler_generating(l, &w, 6).unwrap();
        for v0 in 0..=6u64 {
            for v1 in 0..=(6 - v0) {
                let v = DimVector(vec![v0, v1]);
                let count = enumerate_p_w_v(&spec, &v).unwrap().len();
                let coeff = series.coeff(&Exponents {
                    q: (v0 + v1) as i64,
                    t: 0,
                    r: vec![v0 as i64, v1 as i64],
                });
                assert_eq!(coeff, BigInt::from(count), "w={wv:?} v=({v0},{v1})");
            }
        }
    }
    let w = DimVector(vec![1, 1]);
    let series = euler_generating(2, &w, 2).unwrap();
    assert_eq!(
        series.coeff(&Exponents { q: 2, t: 0, r: vec![1, 1] }),
        BigInt::from(5)
    );
    println!("PASS: Euler series coefficients count fixed points, l=2, |v| <= 6");
}

#[test]
fn acceptance_08_toric_chart_series() {
    let plane = hilbert_series_z(&plane_chart(), 6).unwrap();
    for (n, zn) in plane.iter().enumerate() {
        assert_eq!(*zn, rank_one_closed_form(n as u64, 1), "plane order {n}");
    }
    for l in 2..=3u32 {
        let z = hilbert_series_z(&ale_charts(l).unwrap(), 3).unwrap();
        for (n, zn) in z.iter().enumerate() {
            assert_eq!(*zn, rank_one_closed_form(n as u64, l), "l={l} order {n}");
        }
    }
    println!("PASS: toric chart series match 1/(n! l^n (e1 e2)^n), plane n <= 6, l in {{2,3}} n <= 3");
}

#[test]
fn acceptance_09_betti_product() {
    for l in 2..=3u32 {
        let nq = 12i64;
        let g = gottsche(&[1, 0, l as i64 - 1], nq / l as i64);
        let zq = z_quot_closed(l, nq).unwrap();
        let mut lifted = QSeries::zero(l as usize, nq);
        for (e, c) in g.terms() {
            lifted.add_term(
                Exponents { q: l as i64 * e.q, t: e.t, r: vec![e.q; l as usize] },
                c.clone(),
            );
        }
        assert_eq!(lifted, zq.truncated(l as i64 * (nq / l as i64)), "l={l}");
    }
    let g = gottsche(&[1], 8);
    for n in 0..=8i64 {
        let mut expected = std::collections::BTreeMap::new();
        for y in enumerate_partitions(n as u64) {
            *expected
                .entry(2 * (n - y.rows() as i64))
                .or_insert(BigInt::from(0)) += 1;
        }
        for (t, c) in expected {
            assert_eq!(g.coeff(&Exponents { q: n, t, r: vec![] }), c, "n={n} t={t}");
        }
    }
    println!("PASS: Betti product matches quotient closed form and the plane statistic");
}

#[test]
fn acceptance_10_character_dimension_audit() {
    for l in 2..=3u32 {
        // rank 1
        for j in 0..l {
            let spec = ColorSpec::rank_one(l, j).unwrap();
            for n in 0..=6u64 {
                for y in enumerate_partitions(n) {
                    let ys = vec![y];
                    let v = color_counts(&ys, &spec).unwrap();
                    let d = dim_quiver_variety(&spec.w_vector(), &v).unwrap();
                    let c = tangent_character(&ys, &spec).unwrap();
                    assert_eq!(c.len() as u64, d, "l={l} j={j} ys={ys:?}");
                }
            }
        }
        // rank 2, residue multisets
        for g1 in 0..l {
            for g2 in g1..l {
                let spec = ColorSpec::new(l, vec![g1, g2]).unwrap();
                for n in 0..=6u64 {
                    for a in 0..=n {
                        for y1 in enumerate_partitions(a) {
                            for y2 in enumerate_partitions(n - a) {
                                let ys = vec![y1.clone(), y2];
                                let v = color_counts(&ys, &spec).unwrap();
                                let d = dim_quiver_variety(&spec.w_vector(), &v).unwrap();
                                let c = tangent_character(&ys, &spec).unwrap();
                                assert_eq!(c.len() as u64, d, "l={l} ys={ys:?}");
                            }
                        }
                    }
                }
            }
        }
    }
    println!("PASS: character term count equals the variety dimension, l <= 3, r <= 2, |v| <= 6");
}

#[test]
fn cross_check_common_core_vs_decompose() {
    // the common core of a rank-1 color vector matches direct decomposition
    for l in 2..=3u32 {
        for j in 0..l {
            let spec = ColorSpec::rank_one(l, j).unwrap();
            for n in 0..=8u64 {
                for y in enumerate_partitions(n) {
                    let v = color_counts(std::slice::from_ref(&y), &spec).unwrap();
                    let (_, core) = common_core(l, j, &v).unwrap();
                    assert_eq!(core, decompose(&y, l).unwrap().core, "y={y} l={l} j={j}");
                }
            }
        }
    }
}

#[test]
fn cross_check_closed_form_full_product() {
    // z_closed is the same object the acceptance identity multiplies by hand
    for l in 2..=3u32 {
        for j in 0..l {
            assert_eq!(
                z_closed(l, j, 9).unwrap(),
                theta_core(l, j, 9).unwrap().mul(&z_quot_closed(l, 9).unwrap())
            );
        }
    }
}
