use qtk_core::Exec;

#[test]
fn strategies_agree() {
    let xs: Vec<u64> = (0..1000).collect();
    let a = Exec::Sequential.filter_map(&xs, |x| (x % 3 == 0).then_some(x * x));
    let b = Exec::Parallel.filter_map(&xs, |x| (x % 3 == 0).then_some(x * x));
    assert_eq!(a, b);
    assert_eq!(Exec::Parallel.map(&xs, |x| x + 1)[999], 1000);
}
