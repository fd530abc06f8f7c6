//! Text grammar for generator words: a semicolon-separated list of
//! `j`, `e:<elem>`, `t:<elem>`, `m:<elem>,<elem>`, with elements in the ring
//! element grammar (so `m:[1,0;0,1],[0,1;1,0]` works for matrix rings).

use pe2::Generator;
use ring_core::parse::{parse_element, render, split_top_level};
use ring_core::{Ring, RingError};

pub fn parse_word(ring: &Ring, text: &str) -> ring_core::Result<Vec<Generator>> {
    let mut out = Vec::new();
    for item in split_top_level(text, ';') {
        let item = item.trim();
        if item.is_empty() {
            continue;
        }
        if item == "j" {
            out.push(Generator::J);
            continue;
        }
        let (tag, payload) = item
            .split_once(':')
            .ok_or_else(|| RingError::Parse(format!("bad word item `{item}`")))?;
        match tag.trim() {
            "e" => out.push(Generator::E(parse_element(ring, payload)?)),
            "t" => out.push(Generator::T(parse_element(ring, payload)?)),
            "m" => {
                let parts = split_top_level(payload, ',');
                if parts.len() != 2 {
                    return Err(RingError::Parse(format!(
                        "m takes two payloads, got `{payload}`"
                    )));
                }
                out.push(Generator::M(
                    parse_element(ring, parts[0])?,
                    parse_element(ring, parts[1])?,
                ));
            }
            other => return Err(RingError::Parse(format!("unknown generator `{other}`"))),
        }
    }
    Ok(out)
}

pub fn render_word(gens: &[Generator]) -> String {
    gens.iter()
        .map(|g| match g {
            Generator::J => "j".to_string(),
            Generator::E(a) => format!("e:{}", render(a)),
            Generator::T(a) => format!("t:{}", render(a)),
            Generator::M(r, s) => format!("m:{},{}", render(r), render(s)),
        })
        .collect::<Vec<_>>()
        .join(";")
}

#[cfg(test)]
mod tests {
    use super::*;
    use ring_core::parse_ring;

    #[test]
    fn parse_and_render_round_trip() {
        let ring = parse_ring("mat(2,gf(2))").unwrap();
        let text = "j;e:[0,1;1,1];t:[1,0;0,1];m:[1,0;0,1],[0,1;1,0]";
        let gens = parse_word(&ring, text).unwrap();
        assert_eq!(gens.len(), 4);
        assert_eq!(render_word(&gens), text);
    }

    #[test]
    fn m_requires_units() {
        let ring = parse_ring("zmod(8)").unwrap();
        let gens = parse_word(&ring, "m:2,1").unwrap();
        // construction checks payload invertibility
        assert!(pe2::GroupWord::new(&ring, gens).is_err());
    }
}
