// Bucket-sorted vertex lists and a forward-only cursor walk.

use gridcarve::gen::{generate, Shape};
use gridcarve::{build_sclv, build_srlv};

pub fn run() -> gridcarve::Result<()> {
    let g = generate(Shape::Walk, 12, 3)?;
    let by_col = build_sclv(&g);
    let by_row = build_srlv(&g);
    println!("by column: {:?}", by_col.entries());
    println!("by row:    {:?}", by_row.entries());

    // Count vertices per column in one pass.
    let mut cursor = by_col.cursor();
    while let Some(first) = cursor.current() {
        let mut count = 1;
        while cursor.next_key() == Some(first.col) {
            cursor.advance();
            count += 1;
        }
        println!("column {} holds {count}", first.col);
        cursor.advance();
    }
    println!("cursor advanced {} times", cursor.advances());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("{e}");
        std::process::exit(1);
    }
}
