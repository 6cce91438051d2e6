use e6cs::weight::Weight;
use e6cs::operator::{operator, epsilon};
fn main() {
    let m = Weight([0, 0, 0, 8, 0, 0]);
    let t = std::time::Instant::now();
    let p = e6cs::solver::solve_iterative(&m).unwrap();
    println!("solve {:?}", t.elapsed());
    let t = std::time::Instant::now();
    let img = operator().apply(&p.poly);
    let r = &img - &p.poly.scale(&epsilon(&m));
    println!("residual check {:?}, zero={}", t.elapsed(), r.is_zero());
}
