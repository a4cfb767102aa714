use crate::error::{Error, Result};

/// Parses the comma-separated integer grammar shared by every list-valued
/// input: `4,2,2,1`. Only ASCII digits and commas are accepted; no signs,
/// no blanks between items, no empty items.
pub fn parse_int_list(input: &str) -> Result<Vec<usize>> {
    let trimmed = input.trim();
    if trimmed.is_empty() {
        return Err(Error::parse(input, "empty list"));
    }
    trimmed
        .split(',')
        .map(|item| {
            if item.is_empty() || !item.bytes().all(|b| b.is_ascii_digit()) {
                return Err(Error::parse(input, format!("bad item {item:?}")));
            }
            item.parse::<usize>()
                .map_err(|e| Error::parse(input, e.to_string()))
        })
        .collect()
}

pub(crate) fn join<T: std::fmt::Display>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join(sep)
}
