use regcross_web::{bounds_text, construction_svg_text, probe_text};

#[test]
fn odd_construction_svg() {
    let svg = construction_svg_text(10, 7).unwrap();
    assert_eq!(svg.matches("<circle").count(), 10);
    assert_eq!(svg.matches("<line").count(), 35);
    assert!(!svg.contains("dasharray"));
}

#[test]
fn even_construction_dashes_removed_edges() {
    let svg = construction_svg_text(8, 4).unwrap();
    assert_eq!(svg.matches("<line").count(), 20);
    assert!(svg.contains("dasharray"));
}

#[test]
fn bounds() {
    let text = bounds_text(8, 4).unwrap();
    assert!(text.contains("lower bound 52\nupper bound 56\nvalue is conjectured\n"));
    assert!(text.contains("construction has 52 crossings"));
    assert!(bounds_text(7, 3).is_err());
}

#[test]
fn probe_is_seeded() {
    let a = probe_text(6, 3, 300, 5).unwrap();
    let b = probe_text(6, 3, 300, 5).unwrap();
    assert_eq!(a, b);
    assert!(a.0 <= 15);
    assert!(probe_text(6, 3, 0, 5).is_err());
}
