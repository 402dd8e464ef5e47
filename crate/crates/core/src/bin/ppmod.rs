fn main() {
    std::process::exit(ppmod::cli::main_with_args(std::env::args_os()));
}
