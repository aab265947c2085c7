use hyperbessel::verify::{run_suite, Suite};
fn main() {
    for (s, seed, n) in [(Suite::Whipple, 7u64, 40usize), (Suite::Saalschutz, 7, 40), (Suite::Lemma, 11, 12)] {
        let r = run_suite(s, seed, n).unwrap();
        println!("== {} passed={}", r.suite, r.passed);
        for c in &r.checks {
            println!("   [{}] {} worst={:.3e}", if c.passed {"ok"} else {"FAIL"}, c.label, c.worst);
        }
    }
}
