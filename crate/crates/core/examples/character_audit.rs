//! Does `(k, l) ↦ character of ℤ²` depend on the `SL₂(ℤ)` completion?

use abelian_langlands::fundamental_group::{
    complete_to_sl2, fixed_variant_character, gcd_normal_form, reachability_search, well_definedness_audit,
};

fn main() -> abelian_langlands::Result<()> {
    for (k, l) in [(2, 4), (3, 0), (1, 7), (-6, 4)] {
        let nf = gcd_normal_form(k, l)?;
        let g = complete_to_sl2(nf.alpha, nf.beta)?;
        let audit = well_definedness_audit(k, l, 0..=nf.k_prime)?;
        println!(
            "(k, l) = ({k}, {l}): k' = {}, g = [[{}, {}], [{}, {}]], {} distinct, fixed variant {}",
            nf.k_prime,
            g.a11,
            g.a12,
            g.a21,
            g.a22,
            audit.characters.len(),
            fixed_variant_character(k, l)
        );
        println!("  {}", serde_json::to_string(&audit).expect("serializable"));
    }

    let reach = reachability_search(40, 6);
    println!("{} of {} characters with denominators <= 6 unreached from |k|, |l| <= 40", reach.unreached.len(), reach.candidates);
    if let Some(chi) = reach.unreached.first() {
        println!("  e.g. {chi}");
    }
    if let Some((a, b)) = reach.collision {
        println!("  {a:?} and {b:?} have the same image");
    }
    Ok(())
}
