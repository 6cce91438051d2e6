fn main() {
    let entries = e6cs::golden::embedded_corpus().unwrap();
    let t = std::time::Instant::now();
    let report = e6cs::golden::run_golden(&entries, None).unwrap();
    println!("{}", report.text());
    println!("elapsed: {:?}", t.elapsed());
}
