use std::time::Instant;

use nashkit::gb::{GbCaps, MonomialOrder};
use nashkit::jac2::maximal_minors;
use nashkit::poly::random_poly;

#[test]
#[ignore]
fn timing_probe() {
    let n = 3;
    let order = MonomialOrder::grevlex(n);
    for (spair_cap, terms) in [(500usize, 6usize), (500, 8), (500, 10), (2000, 10), (8000, 10)] {
        let f = random_poly(n, 4, terms, 2001);
        let j2 = maximal_minors(&f);
        let caps = GbCaps {
            spair_cap,
            degree_cap: 40,
        };
        let t = Instant::now();
        let r = j2.groebner(&order, &caps);
        match r {
            Ok(gb) => println!(
                "terms={terms} cap={spair_cap}: OK {} elements in {:?}",
                gb.elements().len(),
                t.elapsed()
            ),
            Err(e) => println!("terms={terms} cap={spair_cap}: {e} after {:?}", t.elapsed()),
        }
    }
}
