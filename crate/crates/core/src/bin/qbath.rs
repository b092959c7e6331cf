fn main() {
    std::process::exit(qbath::cli::main(std::env::args_os()));
}
