//! Cross-engine verification: run every engine on the same word and insist
//! on identical output.

use lyndon::{cfl_duval, cfl_duval_lcp, cfl_rle, cfl_skip, lr_to_cfl, oracle, RleString};

/// Runs all four engines (the RLE engine on the encoded word), plus the
/// brute-force oracle on words of at most 200 characters, and checks that
/// every output is identical and structurally valid. Returns the factor
/// count on agreement and a description of the first divergence otherwise.
pub fn verify_word(w: &[u8]) -> Result<usize, String> {
    let reference = cfl_duval(w);
    if let Err(e) = oracle::validate_cfl(w, &reference) {
        return Err(format!("duval output is not a valid factorization: {e}"));
    }
    let candidates: [(&str, lyndon::Factorization); 3] = [
        ("lcp", cfl_duval_lcp(w)),
        ("skip", cfl_skip(w)),
        ("rle", {
            let r = RleString::encode(w);
            lr_to_cfl(&cfl_rle(&r), &r)
        }),
    ];
    for (name, produced) in &candidates {
        if produced != &reference {
            return Err(divergence(name, &reference, produced));
        }
    }
    if w.len() <= 200 {
        let expected = oracle::cfl(w);
        if reference != expected {
            return Err(divergence("duval (vs oracle)", &expected, &reference));
        }
    }
    Ok(reference.len())
}

fn divergence(
    name: &str,
    reference: &[lyndon::FactorInterval],
    produced: &[lyndon::FactorInterval],
) -> String {
    let idx = reference
        .iter()
        .zip(produced.iter())
        .position(|(a, b)| a != b)
        .unwrap_or_else(|| reference.len().min(produced.len()));
    let show = |f: Option<&lyndon::FactorInterval>| match f {
        Some(f) => format!("({}, {})", f.start, f.end),
        None => "missing".to_string(),
    };
    format!(
        "engine {name} diverges at factor {idx}: reference {} vs {}",
        show(reference.get(idx)),
        show(produced.get(idx)),
    )
}
