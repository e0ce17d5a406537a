//! Levi graphs of PG(2,q), biaffine planes, the Fano subplane of PG(2,4)
//! and the conic classification.
//!
//!     cargo run --example projective_planes

use babi::geometry::{biaffine, conic_oval, fano_subplane_pg24, gf, pg2, BiaffineKind, LineTag, PointTag};
use babi::graph::girth;

fn main() -> babi::Result<()> {
    let f = gf(9)?;
    println!("GF(9): characteristic {}, degree {}", f.characteristic(), f.degree());

    for q in [2, 3, 4, 5, 7, 8, 9] {
        let levi = pg2(q)?.levi();
        println!("PG(2,{q}): Levi graph order {:3}, {}-regular, girth {}", levi.order(), q + 1, girth(&levi));
    }

    for kind in [BiaffineKind::Type1, BiaffineKind::Type2] {
        let inc = biaffine(5, kind)?;
        println!(
            "{kind} biaffine plane, q=5: {} points, {} lines, {} classes of size {}",
            inc.num_points(),
            inc.num_lines(),
            inc.classes.len(),
            inc.classes[0].len()
        );
    }

    let fano = fano_subplane_pg24()?;
    println!("Fano subplane of PG(2,4): points {:?}, lines {:?}", fano.points, fano.lines);

    let oval = conic_oval(7)?;
    println!(
        "conic Y=X^2 in PG(2,7): {} tangents, {} secants, {} external lines; {} external, {} internal points",
        oval.count_lines(LineTag::Tangent),
        oval.count_lines(LineTag::Secant),
        oval.count_lines(LineTag::External),
        oval.count_points(PointTag::External),
        oval.count_points(PointTag::Internal)
    );
    Ok(())
}
