//! DNA codewords: encoding, letterwise reversal, codebook files and the
//! reversibility check, including a code that fails it.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use skewdna::dna::{
    codeword_to_dna, dna_reverse, random_codeword, rho, verify_reversible, Codebook, VerifyMode,
};
use skewdna::SkewCyclicCode;

fn main() {
    let code = SkewCyclicCode::new("1000,B220,D330,1000".parse().unwrap(), 6).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let c = random_codeword(&code, &mut rng);
    let dna = codeword_to_dna(&c);
    println!("codeword  {c:?}");
    println!("DNA       {dna}");
    println!("reversed  {}", dna_reverse(&dna));
    println!("DNA(ρ(c)) {}", codeword_to_dna(&rho(&c)));
    println!("ρ(c) in code: {}", code.contains(&rho(&c)));

    let report = verify_reversible(
        &code,
        VerifyMode::BasisAndRandom {
            samples: 1000,
            seed: 7,
        },
    );
    println!("reversible: {report:?}");

    let book = Codebook::new(&code, code.spanning_codewords());
    let text = book.to_string();
    print!("{text}");
    let parsed: Codebook = text.parse().unwrap();
    println!("round trip ok: {}", parsed.to_string() == text);

    let bad = SkewCyclicCode::new("2000,1000".parse().unwrap(), 6).unwrap();
    let report = verify_reversible(&bad, VerifyMode::ExhaustiveBasis);
    let w = report.witness.clone().unwrap();
    println!(
        "x+α: pass={} witness {w:?}, ρ(witness) {:?}",
        report.pass,
        rho(&w)
    );
}
