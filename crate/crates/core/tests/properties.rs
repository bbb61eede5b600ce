use std::sync::OnceLock;

use proptest::prelude::*;

use qhopf::algebra::{
    build_relations, counit, parse_poly, BoundedIdeal, Gen, Rewriter, Word, DEFAULT_ROW_BUDGET,
};
use qhopf::examples::{classical, glq};
use qhopf::functionals::{evaluate, generator_images, BigRep};
use qhopf::report::{Record, Report, ResidualEntry};
use qhopf::{Data, Poly, Scalar};

struct Fixture {
    data: Data,
    rewriter: Rewriter<Scalar>,
    rep: BigRep<Scalar>,
    ideal: BoundedIdeal<Scalar>,
}

fn fixture(data: Data) -> Fixture {
    let rels = build_relations(&data, false).unwrap();
    let ideal = BoundedIdeal::new(&rels.polys(), &Gen::basic_alphabet(data.n), 3, DEFAULT_ROW_BUDGET).unwrap();
    Fixture {
        rewriter: Rewriter::compile(&rels).unwrap(),
        rep: generator_images(&data).unwrap(),
        ideal,
        data,
    }
}

fn fixtures() -> &'static [Fixture; 2] {
    static F: OnceLock<[Fixture; 2]> = OnceLock::new();
    F.get_or_init(|| [fixture(classical(2)), fixture(glq(2).unwrap())])
}

fn poly(max_len: usize) -> impl Strategy<Value = Poly> {
    let alphabet = Gen::basic_alphabet(2);
    let k = alphabet.len();
    prop::collection::vec((-3i64..=3, -2i64..=2, prop::collection::vec(0..k, 0..=max_len)), 1..=3).prop_map(
        move |terms| {
            let mut p = Poly::zero();
            for (c, e, idx) in terms {
                let w = Word(idx.iter().map(|&i| alphabet[i]).collect());
                p.add_term(w, Scalar::from_int(c) * Scalar::q_pow(e));
            }
            p
        },
    )
}

#[test]
fn ideal_is_proper() {
    for fx in fixtures() {
        assert!(fx.ideal.rank() > 0);
        for g in Gen::basic_alphabet(fx.data.n) {
            assert!(!fx.ideal.contains(&Poly::gen(g)));
        }
        assert!(!fx.ideal.contains(&Poly::one()));
        // p2 p1 - p1 p2 is a relation classically only
        let comm = parse_poly("p[2]*p[1] - p[1]*p[2]", 2).unwrap();
        assert_eq!(fx.ideal.contains(&comm), fx.data.lambda == Scalar::from_int(0));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn functional_representation_is_multiplicative(which in 0usize..2, a in poly(2), b in poly(2)) {
        let fx = &fixtures()[which];
        let lhs = evaluate(&fx.rep, &a.mul(&b)).unwrap();
        let rhs = evaluate(&fx.rep, &a).unwrap().mul(&evaluate(&fx.rep, &b).unwrap());
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn normal_form_preserves_functional_and_counit(which in 0usize..2, p in poly(3)) {
        let fx = &fixtures()[which];
        let nf = fx.rewriter.normalize(&p).unwrap();
        prop_assert_eq!(evaluate(&fx.rep, &p).unwrap(), evaluate(&fx.rep, &nf).unwrap());
        prop_assert_eq!(counit(&p), counit(&nf));
    }

    #[test]
    fn normal_form_differs_by_ideal_element(which in 0usize..2, p in poly(3)) {
        let fx = &fixtures()[which];
        let nf = fx.rewriter.normalize(&p).unwrap();
        prop_assert!(fx.ideal.contains(&p.sub(&nf)));
    }

    #[test]
    fn printed_normal_form_is_a_fixed_point(which in 0usize..2, p in poly(3)) {
        let fx = &fixtures()[which];
        let nf = fx.rewriter.normalize(&p).unwrap();
        let reparsed = parse_poly(&nf.to_string(), fx.data.n).unwrap();
        prop_assert_eq!(&reparsed, &nf);
        prop_assert_eq!(fx.rewriter.normalize(&reparsed).unwrap(), nf);
    }

    #[test]
    fn report_json_round_trips(
        recs in prop::collection::vec(
            ("[A-Za-z0-9 +=>]{1,12}", "[ -~]{0,20}", any::<bool>(),
             prop::collection::vec(("[(),;0-9]{1,8}", "[-q^0-9/ ]{1,8}"), 0..3),
             any::<u32>(), prop::option::of("[ -~]{0,10}")),
            0..5,
        )
    ) {
        let rep = Report::new(
            recs.into_iter()
                .map(|(name, eq, pass, res, us, note)| {
                    let mut r = Record::new(name, eq, pass);
                    r.residual = res.into_iter().map(|(index, value)| ResidualEntry { index, value }).collect();
                    r.elapsed_us = us as u64;
                    r.note = note;
                    r
                })
                .collect(),
        );
        prop_assert_eq!(Report::from_json(&rep.to_json()).unwrap(), rep);
    }
}
