//! Searching palindromic and θ-palindromic right divisors of xⁿ − 1.

use std::time::Instant;

use skewdna::code::{
    search_divisors, GeneratorClass, SearchOptions, SearchStrategy, DEFAULT_BUDGET,
};
use skewdna::report::CodeReport;

fn main() {
    for (n, degree, class) in [
        (6, 3, GeneratorClass::ThetaPalindromic),
        (6, 4, GeneratorClass::Palindromic),
        (8, 5, GeneratorClass::ThetaPalindromic),
    ] {
        let t = Instant::now();
        let out = search_divisors(n, degree, class, &SearchOptions::default()).unwrap();
        println!(
            "n={n} degree={degree} {class}: {} found, exhaustive={}, {} tests, {:?}",
            out.generators.len(),
            out.exhaustive,
            out.candidates_tested,
            t.elapsed()
        );
        for g in out.generators.iter().take(3) {
            let code = skewdna::SkewCyclicCode::new(g.clone(), n).unwrap();
            let r = CodeReport::analyze(&code, DEFAULT_BUDGET, 0, 0).unwrap();
            println!(
                "  {g}  [{},{},{}] reversible={}",
                r.n, r.k, r.d_r16, r.reversibility.pass
            );
        }
    }

    // Direct enumeration under a budget falls back to seeded sampling.
    let opts = SearchOptions {
        budget: 200_000,
        seed: 3,
        strategy: SearchStrategy::Direct,
        ..SearchOptions::default()
    };
    let out = search_divisors(6, 4, GeneratorClass::Palindromic, &opts).unwrap();
    println!(
        "sampled {} of {} candidates: {} found",
        out.candidates_tested,
        out.space_size,
        out.generators.len()
    );
}
