//! Skew polynomial arithmetic: two factorizations of x⁶ − 1 and right
//! division.

use skewdna::{R16Elem, SkewPoly};

fn main() {
    let x6 = SkewPoly::x_n_minus_1(6);
    let pairs = [
        ("1000,B220,B220,1000", "1000,B220,D330,1000"),
        ("1000,8440,1000", "1000,8440,0000,8440,1000"),
    ];
    for (h, g) in pairs {
        let h: SkewPoly = h.parse().unwrap();
        let g: SkewPoly = g.parse().unwrap();
        let (q, r) = x6.right_divmod(&g).unwrap();
        println!("g = {g}");
        println!("  h·g          = {}", &h * &g);
        println!("  (x^6-1) / g  = {q}, remainder {r}");
        println!(
            "  palindromic {}, θ-palindromic {}",
            g.is_palindromic(),
            g.is_theta_palindromic()
        );
    }

    let x = SkewPoly::x();
    let u = SkewPoly::constant(R16Elem::U);
    println!("x·u = {}   u·x = {}", &x * &u, &u * &x);

    let f: SkewPoly = "2184,0001,1000,0F00,0000,3333".parse().unwrap();
    let g: SkewPoly = "2000,1000".parse().unwrap();
    let (q, r) = f.right_divmod(&g).unwrap();
    println!("{f} = ({q})·({g}) + {r}");
    assert_eq!(&(&q * &g) + &r, f);
    println!(
        "x+α right-divides x^6-1: {}",
        g.right_divides_xn_minus_1(6).unwrap()
    );
}
