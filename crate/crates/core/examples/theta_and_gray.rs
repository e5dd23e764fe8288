//! The automorphism θ of R16 and the Gray map, on the element
//! β = α + u + α³v + α²uv.

use skewdna::dna::phi_dna;
use skewdna::{Gf16, R16Elem};

fn main() {
    let a = Gf16::exp;
    let beta = R16Elem::new(a(1), Gf16::ONE, a(3), a(2));
    println!("β       = {beta}");
    println!("θ(β)    = {}", beta.theta());
    println!("θ(θ(β)) = {}", beta.theta().theta());
    println!("gray(β)    = {:?}", beta.gray().0);
    println!("gray(θ(β)) = {:?}", beta.theta().gray().0);
    println!("DNA(β)     = {}", phi_dna(beta));
    println!("DNA(θ(β))  = {}", phi_dna(beta.theta()));

    let fixed = R16Elem::all().filter(|x| x.theta() == *x).count();
    let units = R16Elem::all().filter(|x| x.is_unit()).count();
    println!("θ fixes {fixed} elements; R16 has {units} units");

    // The Gray coordinates are evaluations at (u,v) = (1,1), (0,1), (1,0), (0,0),
    // so these four elements pick out one coordinate each.
    let e = [
        R16Elem::UV,
        R16Elem::V + R16Elem::UV,
        R16Elem::U + R16Elem::UV,
        R16Elem::ONE + R16Elem::U + R16Elem::V + R16Elem::UV,
    ];
    for x in e {
        println!("gray({x}) = {:?}", x.gray().0);
    }
}
