use e6cs::solver::*;
use e6cs::weight::Weight;

fn main() {
    let args: Vec<String> = std::env::args().collect();
    let m: Vec<i32> = args[1..7].iter().map(|s| s.parse().unwrap()).collect();
    let m = Weight(std::array::from_fn(|i| m[i]));
    let t = std::time::Instant::now();
    let p = solve_iterative(&m).unwrap();
    println!("label {:?}: {} terms, solve {:?}", m.0, p.poly.num_terms(), t.elapsed());
}
