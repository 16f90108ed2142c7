use quasischur::elw::elw_to_schur;
use quasischur::hall_littlewood::HallLittlewoodLab;
use quasischur::quasisym::{expansion_to_poly, extract_f_expansion};
use quasischur::schur::schur_ssyt;
use quasischur::{Partition, SparsePoly};

fn part(p: &[usize]) -> Partition {
    Partition::new(p.to_vec()).unwrap()
}

fn schur_sum(e: &quasischur::Expansion, vars: usize) -> SparsePoly {
    let mut acc = SparsePoly::zero(vars);
    for (index, c) in e.iter() {
        acc = &acc + &schur_ssyt(&Partition::new(index.to_vec()).unwrap(), vars).scale(c);
    }
    acc
}

#[test]
fn hall_littlewood_expansion_matches_tableau_schur_functions() {
    // Σ t^maj F_pides and Σ c_λ(t) s_λ must agree as polynomials.
    let lab = HallLittlewoodLab::default();
    for n in 1..=5 {
        for mu in Partition::all(n) {
            let f = lab.inv_zero_f_expansion(&mu).unwrap();
            let s = elw_to_schur(&f).unwrap();
            assert_eq!(expansion_to_poly(&f, n), schur_sum(&s, n), "{mu}");
            assert_eq!(lab.hll_expansion(&mu).unwrap().expansion(), &s);
        }
    }
}

#[test]
fn extraction_then_conversion_of_hall_littlewood_polynomials() {
    let lab = HallLittlewoodLab::default();
    for mu in [part(&[2, 1, 1]), part(&[3, 2]), part(&[2, 2, 1])] {
        let n = mu.weight();
        let s = lab.hll_expansion(&mu).unwrap();
        let p = schur_sum(s.expansion(), n);
        let back = elw_to_schur(&extract_f_expansion(&p).unwrap()).unwrap();
        assert_eq!(&back, s.expansion(), "{mu}");
    }
}

#[test]
fn one_row_coefficient_is_one_up_to_seven() {
    let lab = HallLittlewoodLab::default();
    for n in 1..=7 {
        for mu in Partition::all(n) {
            let r = lab.positivity(&mu).unwrap();
            assert!(r.positive, "{mu}");
            assert!(r.census_ok, "{mu}");
            assert!(r.one_row_coefficient_is_one, "{mu}");
        }
    }
}

#[test]
fn experiment_identity_and_findings() {
    let lab = HallLittlewoodLab::default();
    for n in 1..=7 {
        for mu in Partition::all(n) {
            let r = lab.leftover_experiment(&mu).unwrap();
            assert!(r.discrepancy.is_empty(), "{mu}");
            assert_eq!(r.conjectured, r.actual);
            assert_eq!(r.kept, r.records.iter().filter(|x| x.kept).count());
        }
    }
    let r = lab.leftover_experiment(&part(&[3, 3, 3])).unwrap();
    assert_eq!(r.fillings, 1680);
    assert_eq!(r.discrepancy.len(), 1);
    let mut sum = r.conjectured.expansion().clone();
    for d in &r.discrepancy {
        sum.add_term(d.index.parts(), &d.coeff).unwrap();
    }
    assert_eq!(&sum, r.actual.expansion());
}
