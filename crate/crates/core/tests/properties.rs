use proptest::prelude::*;

use qyl_core::arith::QValue;
use qyl_core::criterion::check_theorem;
use qyl_core::gln::GlnRep;
use qyl_core::gt::HighestWeight;
use qyl_core::oracle::{burnside_outcome, oracle_irreducible};
use qyl_core::yangian::{EvalModule, TensorModule, YangianModule};

fn pair(l: &HighestWeight, m: &HighestWeight) -> TensorModule {
    let q = QValue::default();
    TensorModule::pair(EvalModule::standard(GlnRep::build(l, &q)), EvalModule::standard(GlnRep::build(m, &q))).unwrap()
}

/// A dominant weight of length `n` with entries in `lo..=lo + width`.
fn weight(n: usize, width: i64) -> impl Strategy<Value = HighestWeight> {
    (-2i64..=2, proptest::collection::vec(0..=width, n)).prop_map(move |(lo, mut v)| {
        v.sort_unstable_by(|a, b| b.cmp(a));
        HighestWeight::new(v.into_iter().map(|x| x + lo).collect()).unwrap()
    })
}

fn small_pair(n: usize, width: i64) -> impl Strategy<Value = (HighestWeight, HighestWeight)> {
    (weight(n, width), weight(n, width)).prop_filter("keep the Burnside check cheap", |(l, m)| {
        l.weyl_dimension() * m.weyl_dimension() <= 64
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn three_verdicts_agree_gl2((l, m) in small_pair(2, 4)) {
        let tm = pair(&l, &m);
        let crit = check_theorem(&l, &m).unwrap().verdict.is_irreducible();
        let o = oracle_irreducible(&tm);
        let b = burnside_outcome(&tm, 64).unwrap();
        prop_assert!(o.singular_dim >= 1);
        prop_assert_eq!(crit, o.irreducible);
        prop_assert_eq!(crit, b.full);
        prop_assert_eq!(b.full, b.algebra_dim == tm.dim() * tm.dim());
    }

    #[test]
    fn three_verdicts_agree_gl3((l, m) in small_pair(3, 2)) {
        let tm = pair(&l, &m);
        let crit = check_theorem(&l, &m).unwrap().verdict.is_irreducible();
        prop_assert_eq!(crit, oracle_irreducible(&tm).irreducible);
        prop_assert_eq!(crit, burnside_outcome(&tm, 64).unwrap().full);
    }

    #[test]
    fn reducible_outcomes_carry_a_subspace((l, m) in small_pair(2, 3)) {
        let tm = pair(&l, &m);
        let b = burnside_outcome(&tm, 64).unwrap();
        if !b.full {
            prop_assert!(b.algebra_dim < tm.dim() * tm.dim());
            if let Some(w) = b.invariant_subspace_dim {
                prop_assert!(0 < w && w < tm.dim());
            } else {
                prop_assert!(b.exact);
            }
        }
    }

    #[test]
    fn oracle_is_symmetric_and_shift_invariant((l, m) in small_pair(2, 3), t in -2i64..=2) {
        let v = oracle_irreducible(&pair(&l, &m)).irreducible;
        prop_assert_eq!(v, oracle_irreducible(&pair(&m, &l)).irreducible);
        prop_assert_eq!(v, oracle_irreducible(&pair(&l.shifted(t), &m.shifted(t))).irreducible);
    }
}
