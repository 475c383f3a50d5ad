use std::fs;

use crit_core::critical::{assemble, lift_drawing, AssembleError, AssemblyBundle, ComponentKind, Copies, GadgetStyle};
use crit_core::drawing::validate;
use crit_core::family::{build_family, canonical_drawing, deleted_edge_drawing};

fn component_totals(b: &AssemblyBundle) -> usize {
    b.components
        .iter()
        .map(|c| {
            let r = validate(&c.cert);
            assert!(r.valid, "{}: {:?}", c.name, r.violations);
            r.crossing_count
        })
        .sum()
}

#[test]
fn lifted_family_drawings_validate() {
    let inst = build_family(2).unwrap();
    let lifted = lift_drawing(&canonical_drawing(&inst).unwrap(), 172, GadgetStyle::K2t).unwrap();
    let r = validate(&lifted);
    assert!(r.valid);
    assert_eq!(r.crossing_count, 171);
    assert!(lifted.base().thick().is_empty());
    let thick = inst.special.thick().len();
    assert_eq!(lifted.base().graph().vertex_count(), inst.special.graph().vertex_count() + 172 * thick);

    let lifted = lift_drawing(&deleted_edge_drawing(&inst, 1).unwrap(), 172, GadgetStyle::K2t).unwrap();
    let r = validate(&lifted);
    assert!(r.valid);
    assert_eq!(r.crossing_count, 170);
}

#[test]
fn bundle_examples() {
    let b = assemble(171, 3, Copies::Auto).unwrap();
    assert_eq!((b.copies, b.k5_copies()), (1, 0));
    assert_eq!(component_totals(&b), 171);

    let b = assemble(173, 2, Copies::Auto).unwrap();
    assert_eq!((b.copies, b.k5_copies()), (1, 2));
    assert_eq!(component_totals(&b), 173);
    let combined = validate(&b.combined_cert());
    assert!(combined.valid);
    assert_eq!(combined.crossing_count, 173);

    let b = assemble(342, 2, Copies::Auto).unwrap();
    assert_eq!((b.copies, b.k5_copies()), (2, 0));
    assert_eq!(component_totals(&b), 342);
    let inst = build_family(2).unwrap();
    for c in b.components.iter().filter(|c| c.kind == ComponentKind::Family) {
        let v = c.shift.vertex(inst.roles.v);
        assert!(b.graph.degree(v) >= 2);
        assert_eq!(b.graph.label(v), Some("v"));
    }

    assert!(matches!(assemble(100, 2, Copies::Auto), Err(AssembleError::KTooSmall(100))));
}

#[test]
fn bundle_directory_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let b = assemble(173, 1, Copies::Explicit(1)).unwrap();
    b.write_dir(dir.path()).unwrap();
    let names: Vec<String> = fs::read_dir(dir.path().join("certs"))
        .unwrap()
        .map(|e| e.unwrap().file_name().into_string().unwrap())
        .collect();
    assert_eq!(names.len(), 4);
    let back = AssemblyBundle::read_dir(dir.path()).unwrap();
    assert_eq!(back.graph, b.graph);
    assert_eq!(back.provenance(), b.provenance());
    assert_eq!(component_totals(&back), 173);
    let prov = fs::read_to_string(dir.path().join("provenance.json")).unwrap();
    assert!(prov.contains("\"gadget_t\": 172"));

    // writing again gives identical bytes
    let again = tempfile::tempdir().unwrap();
    b.write_dir(again.path()).unwrap();
    for file in ["graph.json", "provenance.json", "certs/combined.json", "certs/family-1.json"] {
        assert_eq!(
            fs::read(dir.path().join(file)).unwrap(),
            fs::read(again.path().join(file)).unwrap(),
            "{file}"
        );
    }
}
