fn main() {
    std::process::exit(zfgraph::cli::run(std::env::args_os()));
}
