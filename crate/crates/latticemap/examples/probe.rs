use latticemap::equivmap::liwu_sixteen;
use latticemap::linalg::cx;
use latticemap::spin::{ising_edge_weights, z_spin_bruteforce, IsingParams};
use latticemap::vertex::{tensor_from_sixteen, z_vertex_bruteforce, Sixteen16VWeights, VertexTensor};
use num_complex::Complex64;

fn z16_with(v_assign: &[usize; 8], s: &Sixteen16VWeights, l: usize) -> Complex64 {
    // v_assign[k] = which odd slot (0..8 canonical list) gets label v_{k+1}
    let slots: [(usize, usize, usize, usize); 8] = [
        (0, 1, 0, 0), // current v1
        (1, 0, 1, 1), // v2
        (1, 0, 0, 0), // v3
        (0, 1, 1, 1), // v4
        (1, 1, 0, 1), // v5
        (0, 0, 1, 0), // v6
        (0, 0, 0, 1), // v7
        (1, 1, 1, 0), // v8
    ];
    let base = tensor_from_sixteen(&Sixteen16VWeights {
        w: s.w,
        v: [cx(0.0); 8],
    });
    let mut t = VertexTensor::zeros(2);
    for i1 in 0..2 {
        for i2 in 0..2 {
            for i3 in 0..2 {
                for i4 in 0..2 {
                    t.set(i1, i2, i3, i4, base.get(i1, i2, i3, i4));
                }
            }
        }
    }
    for (k, &slot_idx) in v_assign.iter().enumerate() {
        let (a, b, c, d) = slots[slot_idx];
        t.set(a, b, c, d, s.v[k]);
    }
    z_vertex_bruteforce(&t, l).unwrap()
}

fn main() {
    let p = IsingParams { beta: 1.0, jh: 0.4, jv: 0.4, hfield: 0.3 };
    let s = liwu_sixteen(&p).unwrap();
    let z_ising = z_spin_bruteforce(&ising_edge_weights(&p), 2).unwrap();
    println!("Z_ising = {z_ising}");

    // H=0 even-only check
    let p0 = IsingParams { hfield: 0.0, ..p };
    let s0 = liwu_sixteen(&p0).unwrap();
    let z0 = z_vertex_bruteforce(&tensor_from_sixteen(&s0), 2).unwrap();
    let zi0 = z_spin_bruteforce(&ising_edge_weights(&p0), 2).unwrap();
    println!("H=0: z16={z0}  z_ising={zi0}  rel={:.2e}", (z0 - zi0).norm() / zi0.norm());

    // current assignment
    let z = z_vertex_bruteforce(&tensor_from_sixteen(&s), 2).unwrap();
    println!("current: z16={z} rel={:.2e}", (z - z_ising).norm() / z_ising.norm());

    // try all assignments of the v-class slots: class A = {v1,v3,v6,v8} values equal,
    // class B equal, so only the CHOICE of which 4 slots carry class A matters: C(8,4)=70
    let mut hits = 0;
    for mask in 0..256u32 {
        if mask.count_ones() != 4 { continue; }
        let mut t = tensor_from_sixteen(&Sixteen16VWeights { w: s.w, v: [cx(0.0); 8] });
        let slots: [(usize, usize, usize, usize); 8] = [
            (0, 1, 0, 0), (1, 0, 1, 1), (1, 0, 0, 0), (0, 1, 1, 1),
            (1, 1, 0, 1), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 0),
        ];
        for (i, &(a, b, c, d)) in slots.iter().enumerate() {
            let val = if mask & (1 << i) != 0 { s.v[0] } else { s.v[1] };
            t.set(a, b, c, d, val);
        }
        let z = z_vertex_bruteforce(&t, 2).unwrap();
        if (z - z_ising).norm() <= 1e-10 * z_ising.norm() {
            hits += 1;
            println!("MATCH mask {mask:08b} (bit i => slot i carries class A)");
        }
    }
    println!("total matching masks: {hits}");
}
