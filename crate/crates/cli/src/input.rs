//! Input grammar shared by every subcommand: comma-separated nonnegative
//! integers, a pair's two sides separated by `|`, whitespace insignificant.
//! An empty side is the empty sequence. Parse errors name the side and the
//! 1-based element that failed.

/// Parse one sequence. `label` names it in error messages ("side A",
/// "sequence", "schedule").
pub fn parse_elements(text: &str, label: &str) -> Result<Vec<u64>, String> {
    let trimmed = text.trim();
    if trimmed.is_empty() {
        return Ok(Vec::new());
    }
    trimmed
        .split(',')
        .enumerate()
        .map(|(i, token)| {
            let token = token.trim();
            token.parse::<u64>().map_err(|_| {
                format!(
                    "{label}, element {}: '{token}' is not a nonnegative integer",
                    i + 1
                )
            })
        })
        .collect()
}

/// Parse `"A | B"` into the two element lists.
pub fn parse_pair(text: &str) -> Result<(Vec<u64>, Vec<u64>), String> {
    let sides: Vec<&str> = text.split('|').collect();
    if sides.len() != 2 {
        return Err(format!(
            "expected two sequences separated by one '|', found {} part(s)",
            sides.len()
        ));
    }
    Ok((
        parse_elements(sides[0], "side A")?,
        parse_elements(sides[1], "side B")?,
    ))
}
