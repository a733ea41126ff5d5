//! Drive the command line in-process, save its report, and replay it.

fn main() {
    let path = std::env::temp_dir().join("zfgraph-h23.json");
    let path = path.to_str().expect("utf-8 temp path");
    let code = zfgraph::cli::run(["zfgraph", "zf", "hamming", "-n", "2", "-q", "3", "--mode", "exact", "--report", path]);
    println!("zf exited with {code}");

    let report = zfgraph::report::Report::from_json(&std::fs::read_to_string(path).unwrap()).unwrap();
    println!("z = {}, tagged {:?}", report.values["z"], report.exact_tags.get("z"));
    let outcome = zfgraph::report::replay(&report, &zfgraph::config::Caps::from_env()).unwrap();
    println!("replayed {} certificates, failed {:?}", outcome.certificates, outcome.failed);
}
