fn main() {
    std::process::exit(ivp_factor::cli::main_entry());
}
