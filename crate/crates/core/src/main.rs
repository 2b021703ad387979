fn main() {
    std::process::exit(bizeta::cli::main_entry());
}
