//! One-way ANOVA and Kruskal–Wallis across the eight methods of the shipped
//! MSE matrix (datasets are the observations).

use neutrorec::evaluation::report::{anova_csv, kruskal_csv, read_matrix_columns};
use neutrorec::evaluation::{anova_one_way, kruskal_wallis};

fn main() -> neutrorec::Result<()> {
    let text = include_str!("../data/table14_mse.csv");
    let groups = read_matrix_columns(text)?;
    print!("{}", anova_csv(&anova_one_way(&groups)?, groups.len())?);
    println!();
    print!("{}", kruskal_csv(&kruskal_wallis(&groups)?, groups.len())?);
    Ok(())
}
