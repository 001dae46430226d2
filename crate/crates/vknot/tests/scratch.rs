use num_bigint::BigInt;
use vknot::gauss::GaussDiagram;
use vknot::invariants::count_colorings_diagram;
use vknot::moves::{replay, simplify};

#[test]
fn probe_sum_search() {
    let all = GaussDiagram::enumerate_all(2);
    println!("2-chord diagrams: {}", all.len());
    let trivializable: Vec<(GaussDiagram, usize)> = all
        .iter()
        .filter_map(|d| {
            let s = simplify(d, 100);
            if s.diagram.is_empty() {
                assert!(replay(d, &s.log).unwrap().is_empty());
                Some((d.clone(), s.log.len()))
            } else {
                None
            }
        })
        .collect();
    println!("trivializable: {}", trivializable.len());
    let mut found = 0;
    'outer: for (e1, _) in &trivializable {
        for (e2, _) in &trivializable {
            for g1 in 0..e1.gap_count() {
                for g2 in 0..e2.gap_count() {
                    let sum = e1.connected_sum(g1, e2, g2).unwrap();
                    if count_colorings_diagram(&sum, 3) == BigInt::from(9) {
                        println!(
                            "FOUND: {} # {} at ({g1},{g2}) -> {}",
                            e1.serialize(),
                            e2.serialize(),
                            sum.serialize()
                        );
                        found += 1;
                        if found > 4 {
                            break 'outer;
                        }
                    }
                }
            }
        }
    }
    println!("total hits (capped): {found}");
    panic!("probe only");
}
