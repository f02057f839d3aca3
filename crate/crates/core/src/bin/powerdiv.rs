fn main() {
    std::process::exit(powerdiv::cli::run(std::env::args_os()));
}
