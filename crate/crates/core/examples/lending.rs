//! Library items and patrons linked by id, with an integrity scan.

use acc_kit::lending::{NewItem, Registry, ReportMode};
use acc_kit::rng::Lcg32;

fn main() {
    let mut rng = Lcg32::new(1);
    let mut reg = Registry::with_defaults(&mut rng);
    println!("borrow 1001<-1002: {}", reg.borrow(1001, 1002));
    println!("borrow 1000<-1002: {}", reg.borrow(1000, 1002));
    match reg.add_item(NewItem::book(320, "name")) {
        Ok(id) => println!("added item {id}"),
        Err(e) => println!("{e}"),
    }
    reg.remove_patron(1001);
    println!("links ok: {:?}", reg.verify_links());
    print!("{}", reg.report(ReportMode::Staff));
    print!("{}", reg.report(ReportMode::Patron));
}
