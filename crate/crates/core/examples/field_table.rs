//! Prints GF(16) with its DNA double bases and checks that x ↦ x⁴ reverses
//! the pair.

use skewdna::dna::tau;
use skewdna::table::TABLE;
use skewdna::Gf16;

fn main() {
    println!("{:<6} {:<16} {:<4} pair(x^4)", "power", "additive", "pair");
    for row in TABLE.iter() {
        let x = Gf16::new(row.additive);
        println!(
            "{:<6} {:<16} {:<4} {}",
            row.power_label(),
            row.additive_label(),
            tau(x),
            tau(x.frob())
        );
        assert_eq!(tau(x.frob()), tau(x).reversed());
    }

    let a = Gf16::ALPHA;
    println!();
    println!("α^15 = {}", a.pow(15));
    println!("α^7 · α^13 = α^{}", (a.pow(7) * a.pow(13)).log().unwrap());
    println!("(α^3)^-1 = α^{}", a.pow(3).inv().unwrap().log().unwrap());
}
