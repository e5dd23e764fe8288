//! Parameters of skew cyclic codes: dimension, component codes and minimum
//! distance.

use skewdna::code::DEFAULT_BUDGET;
use skewdna::{SkewCyclicCode, SkewPoly};

fn main() {
    for (g, n) in [
        ("1000,B220,D330,1000", 6),
        ("1000,8440,0000,8440,1000", 6),
        ("1000,1000", 2),
        ("2000,1000", 6),
    ] {
        let g: SkewPoly = g.parse().unwrap();
        let code = SkewCyclicCode::new(g, n).unwrap();
        let (n, k, d) = code.params(DEFAULT_BUDGET).unwrap();
        println!("g = {}  [{n},{k},{d}]", code.generator());
        for comp in code.component_codes() {
            let d = comp.min_distance(DEFAULT_BUDGET).unwrap();
            println!(
                "  component {} dim {} d {:?}",
                comp.index(),
                comp.dimension(),
                d
            );
            for row in comp.generator_matrix() {
                let row: Vec<String> = row.iter().map(|x| x.to_string()).collect();
                println!("    {}", row.join(" "));
            }
        }
    }

    let code = SkewCyclicCode::new("1000,B220,D330,1000".parse().unwrap(), 6).unwrap();
    let c = code.encode(&"1000,2000".parse().unwrap()).unwrap();
    let shifted = SkewCyclicCode::skew_shift(&c);
    println!("c            = {c:?}");
    println!(
        "skew shift   = {shifted:?}, in code: {}",
        code.contains(&shifted)
    );
    match code.min_distance(1000) {
        Ok(d) => println!("d = {d}"),
        Err(e) => println!("small budget: {e}"),
    }
}
