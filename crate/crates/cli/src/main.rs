fn main() {
    println!("powellkit");
}
