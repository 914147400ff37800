//! Arithmetic in F_256 and its Frobenius-invariant subfield F_4.

use orepoly::ffield::FieldDesc;
use orepoly::parse;
use orepoly::{Field, FiniteField};

fn main() -> orepoly::Result<()> {
    let f = parse::parse_field("GF(2^8; modulus=x^8 + x^4 + x^3 + x^2 + 1; var=a)")?;
    println!("{}", f.literal());

    let x = parse::parse_element(&f, "a^7 + a^5 + a^3 + a^2 + a + 1")?;
    let y = f.inv(&x).expect("nonzero");
    println!("x = {}", f.format(&x));
    println!("1/x = {}", f.format(&y));
    println!("x^4 = {}", f.format(&f.frobenius(&x, 2)));

    let map = orepoly::ffield::subfield::invariant_subfield(&f, 2)?;
    let b = map.embed(&map.k_field().gen());
    println!("K has {} elements, [F:K] = {}", map.k_field().q(), map.mu());
    println!("b = {} (= a^85: {})", f.format(&b), b == f.pow(&f.gen(), 85));

    let coords: Vec<String> = map.expand(&x).iter().map(|c| map.k_field().format(c)).collect();
    println!("x over K in the basis 1, a, a^2, a^3: [{}]", coords.join(", "));
    assert_eq!(map.contract(&map.expand(&x)), x);

    // Odd characteristic uses Zech logarithms for addition.
    let f9 = FieldDesc::new(3, 2)?;
    let g = f9.primitive_element();
    println!("in GF(9): g = {}, g^4 = {}", f9.format(&g), f9.format(&f9.pow(&g, 4)));
    Ok(())
}
