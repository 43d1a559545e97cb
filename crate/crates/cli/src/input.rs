use std::path::Path;

use clap::ValueEnum;
use ssmin::instances::parse_graph;
use ssmin::setfn::{DenseTableFunction, GraphCutFunction};
use ssmin::SetFunctionOracle;

use crate::commands::CliError;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Graph,
    Table,
}

pub enum Loaded {
    Graph(GraphCutFunction),
    Table(DenseTableFunction),
}

impl Loaded {
    pub fn oracle(&self) -> &dyn SetFunctionOracle {
        match self {
            Loaded::Graph(g) => g,
            Loaded::Table(t) => t,
        }
    }
}

pub fn load(path: &Path, format: Option<InputFormat>) -> Result<Loaded, CliError> {
    let format = match format {
        Some(f) => f,
        None => match path.extension().and_then(|e| e.to_str()) {
            Some("graph") => InputFormat::Graph,
            Some("table") => InputFormat::Table,
            _ => {
                return Err(CliError::input(format!(
                    "{}: cannot infer format from extension, pass --format graph|table",
                    path.display()
                )))
            }
        },
    };
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    let in_file = |e: ssmin::Error| CliError::input(format!("{}: {e}", path.display()));
    Ok(match format {
        InputFormat::Graph => Loaded::Graph(parse_graph(&text).map_err(in_file)?),
        InputFormat::Table => Loaded::Table(DenseTableFunction::parse(&text).map_err(in_file)?),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extension_decides_format() {
        let dir = std::env::temp_dir().join(format!("ssmin-input-{}", std::process::id()));
        std::fs::create_dir_all(&dir).unwrap();
        let graph = dir.join("g.graph");
        std::fs::write(&graph, "a b 1\n").unwrap();
        assert!(matches!(load(&graph, None), Ok(Loaded::Graph(_))));

        let table = dir.join("t.table");
        std::fs::write(&table, "1\n0 0\n").unwrap();
        assert!(matches!(load(&table, None), Ok(Loaded::Table(_))));
        // wrong override: a table read as a graph fails to parse
        assert_eq!(
            load(&table, Some(InputFormat::Graph)).err().unwrap().code,
            2
        );

        let other = dir.join("f.dat");
        std::fs::write(&other, "a b 1\n").unwrap();
        assert!(load(&other, None).is_err());
        assert!(matches!(
            load(&other, Some(InputFormat::Graph)),
            Ok(Loaded::Graph(_))
        ));
        std::fs::remove_dir_all(&dir).unwrap();
    }
}
