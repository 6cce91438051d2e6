use e6cs::series::*;
use e6cs::weight::Weight;
fn main() {
    let t0 = std::time::Instant::now();
    for k in 1..=6usize {
        for n in 1..=4 {
            let t = std::time::Instant::now();
            let fam = recurrence_coefficients(k, n).unwrap();
            println!("family {k} n={n}: {} terms, {:?}", fam.coefficients.len(), t.elapsed());
        }
    }
    println!("recurrences total: {:?}", t0.elapsed());
    let t = std::time::Instant::now();
    let s = deformed_cg(&Weight([0,0,0,1,0,0]), &Weight([0,0,0,1,0,0])).unwrap();
    println!("l4 x l4 series: {} terms, {:?}", s.terms.len(), t.elapsed());
}
