//! Worked examples on the reference spaces, checked through the public API.

use std::sync::Arc;

use softtopo::analysis::connectedness::find_semiseparation;
use softtopo::analysis::cover::analyze_cover;
use softtopo::analysis::separation::{check_axiom, seminormal_characterization, Axiom, Witness};
use softtopo::analysis::compactness::is_semicompact;
use softtopo::fixtures::{discrete_space, example_f1, example_space, indiscrete_space};
use softtopo::semi::{self, definitional};
use softtopo::topology::from_subbasis;
use softtopo::{Error, SoftFunction, SoftSet, SoftTopology, SpaceSignature, TopologyViolation};

fn lit(t: &SoftTopology, s: &str) -> SoftSet {
    SoftSet::parse_literal(t.signature(), s).unwrap()
}

#[test]
fn soft_set_operations() {
    let ex = example_space();
    let f1 = example_f1();
    assert_eq!(f1.complement(), lit(&ex, r#"{"e1":["h3"],"e2":["h2","h3"]}"#));
    assert!(lit(&ex, r#"{"e1":["h1"],"e2":[]}"#).is_subset(&f1).unwrap());
    assert!(!f1.is_subset(&f1.complement()).unwrap());
    assert!(f1.is_disjoint(&lit(&ex, r#"{"e1":["h3"],"e2":["h3"]}"#)).unwrap());
    let sig = ex.signature();
    let all: Vec<SoftSet> = softtopo::enumerate_soft_sets(sig).unwrap().collect();
    assert_eq!(all.len(), 64);
    assert!(all[0].is_null() && all[63].is_absolute());
    for g in &all {
        assert_eq!(&SoftSet::null(sig).union(g).unwrap(), g);
        assert_eq!(&SoftSet::absolute(sig).intersection(g).unwrap(), g);
    }
    let union_soss = softtopo::union(sig, &semi::enumerate_soss(&ex).unwrap()).unwrap();
    assert!(union_soss.is_absolute());
    assert!(matches!(softtopo::intersection(std::iter::empty::<&SoftSet>()), Err(Error::EmptyIntersection)));
}

#[test]
fn topology_examples() {
    let ex = example_space();
    let f1 = example_f1();
    assert!(ex.closure(&f1).unwrap().is_absolute());
    assert!(ex.interior(&f1.complement()).unwrap().is_null());
    assert_eq!(ex.subspace(&f1).unwrap().len(), 2);
    assert!(!ex.is_basis(&[f1.clone()]).unwrap());
    assert!(ex.is_basis(&ex.opens()).unwrap());
    assert_eq!(from_subbasis(ex.signature(), &[f1]).unwrap(), ex);

    let ind = indiscrete_space();
    assert!(ind.closure(&lit(&ind, r#"{"e1":["h1"]}"#)).unwrap().is_absolute());
    assert!(ind.is_basis(&[SoftSet::absolute(ind.signature())]).unwrap());

    let sig = ind.signature();
    let opens = [
        SoftSet::null(sig),
        SoftSet::absolute(sig),
        lit(&ind, r#"{"e1":["h1"]}"#),
        lit(&ind, r#"{"e1":["h2"]}"#),
    ];
    // {h1} ∪ {h2} = U here, so this family is closed; shrink U to get a gap
    assert!(SoftTopology::validate(sig, opens.clone()).is_ok());
    let sig3 = Arc::new(SpaceSignature::standard(3, 1).unwrap());
    let gap = [
        SoftSet::null(&sig3),
        SoftSet::absolute(&sig3),
        SoftSet::parse_literal(&sig3, r#"{"e1":["h1"]}"#).unwrap(),
        SoftSet::parse_literal(&sig3, r#"{"e1":["h2"]}"#).unwrap(),
    ];
    match SoftTopology::validate(&sig3, gap) {
        Err(Error::Violation(TopologyViolation::UnionNotOpen { left, right })) => {
            assert_eq!(left.union(&right).unwrap().to_literal(), r#"{"e1":["h1","h2"]}"#);
        }
        other => panic!("expected a union violation, got {other:?}"),
    }
}

#[test]
fn semi_structure_examples() {
    let ex = example_space();
    let g = lit(&ex, r#"{"e1":["h1","h2"],"e2":["h1","h2"]}"#);
    let c = semi::classify(&ex, &g).unwrap();
    assert!(c.is_semiopen && !c.is_open);
    let k = lit(&ex, r#"{"e1":["h3"],"e2":["h3"]}"#);
    let c = semi::classify(&ex, &k).unwrap();
    assert!(c.is_semiclosed && !c.is_closed);
    assert!(!semi::classify(&ex, &example_f1()).unwrap().is_semiclosed);
    let g0 = lit(&ex, r#"{"e1":["h1"],"e2":[]}"#);
    assert!(!semi::is_semiopen(&ex, &g0).unwrap().holds);
    for (fast, slow) in [
        (semi::ssint(&ex, &g0).unwrap(), definitional::ssint(&ex, &g0).unwrap()),
        (semi::sscl(&ex, &g0).unwrap(), definitional::sscl(&ex, &g0).unwrap()),
    ] {
        assert_eq!(fast, slow);
    }
    assert!(semi::ssint(&ex, &g0).unwrap().is_null());
    assert!(semi::sscl(&ex, &g0).unwrap().is_absolute());
    assert_eq!(semi::enumerate_soss(&ex).unwrap().len(), 9);
    assert_eq!(semi::enumerate_soss(&indiscrete_space()).unwrap().len(), 2);
    assert_eq!(semi::enumerate_soss(&discrete_space()).unwrap().len(), 4);
}

#[test]
fn map_examples() {
    let ex = example_space();
    let src = ex.signature();
    let tgt = Arc::new(SpaceSignature::standard(3, 1).unwrap());
    let f = SoftFunction::new(src, &tgt, vec![0, 1, 2], vec![0, 0]).unwrap();
    assert_eq!(f.image(&example_f1()).unwrap().to_literal(), r#"{"e1":["h1","h2"]}"#);
    let h = SoftSet::parse_literal(&tgt, r#"{"e1":["h1"]}"#).unwrap();
    assert_eq!(f.preimage(&h).unwrap().to_literal(), r#"{"e1":["h1"],"e2":["h1"]}"#);
}

#[test]
fn analysis_examples() {
    let ex = example_space();
    let carrier = ex.carrier();
    let soss = semi::enumerate_soss(&ex).unwrap();
    let report = analyze_cover(&ex, &carrier, &soss).unwrap();
    assert!(report.is_cover && report.is_semiopen_cover);
    assert_eq!(report.minimal_subcover.map(|c| c.len()), Some(1));
    assert!(!analyze_cover(&ex, &carrier, &[example_f1()]).unwrap().is_cover);

    let compact = is_semicompact(&ex).unwrap();
    assert!(compact.semicompact && compact.fip_characterization.holds && compact.fip_characterization.exhaustive);

    assert!(find_semiseparation(&indiscrete_space()).unwrap().is_none());
    assert!(find_semiseparation(&ex).unwrap().is_none());
    let dis = discrete_space();
    let sep = find_semiseparation(&dis).unwrap().unwrap();
    assert_eq!(
        (sep.first.to_literal(), sep.second.to_literal()),
        (r#"{"e1":["h1"]}"#.to_string(), r#"{"e1":["h2"]}"#.to_string())
    );

    assert!(check_axiom(&dis, Axiom::SemiT0).unwrap().holds);
    assert!(check_axiom(&dis, Axiom::SemiT2).unwrap().holds);
    let t0 = check_axiom(&indiscrete_space(), Axiom::SemiT0).unwrap();
    assert!(matches!(t0.witness(), Some(Witness::Points(..))));
    assert!(seminormal_characterization(&dis).unwrap().is_none());
    assert!(seminormal_characterization(&indiscrete_space()).unwrap().is_none());
}
