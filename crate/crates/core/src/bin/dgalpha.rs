fn main() {
    let code = digraph_alpha::harness::run(std::env::args_os(), &mut std::io::stdout(), &mut std::io::stderr());
    std::process::exit(code);
}
