use std::time::Instant;
use bn_core::counting::factorial;
use bn_core::permgroup::{all_generators, classify_group, group_order, ClassifyConfig, Verdict};
use bn_core::{BrillNoetherParams, RamificationSequence, SkewDiagram, TableauSet};

fn main() {
    let p = BrillNoetherParams::new(
        12, 2, 12,
        RamificationSequence::new(vec![1, 1, 1]).unwrap(),
        RamificationSequence::new(vec![1, 1, 1]).unwrap(),
    ).unwrap();
    let diag = SkewDiagram::build(&p).unwrap();
    let t0 = Instant::now();
    let tabs = TableauSet::enumerate(&diag, 200_000).unwrap();
    println!("enumerate N={} in {:?}", tabs.len(), t0.elapsed());
    let t0 = Instant::now();
    let gens = all_generators(&tabs);
    println!("generators: {} in {:?}", gens.len(), t0.elapsed());
    let t0 = Instant::now();
    let order = group_order(&gens.perms(), tabs.len(), 5000).unwrap();
    println!("bsgs order computed in {:?}", t0.elapsed());
    assert_eq!(order, factorial(tabs.len() as u64));
    println!("order == {}! confirmed", tabs.len());
    let t0 = Instant::now();
    let c = classify_group(&gens, tabs.len(), &ClassifyConfig::default());
    println!("classify: {:?} in {:?}", c.verdict == Verdict::Symmetric, t0.elapsed());
    println!("witness: {:?} threshold_milli {}", c.certificates.mover_witness, c.certificates.threshold_milli);
}
