use super::{Command, Script, Statement};

/// Renders a script in the input language; parsing the output yields an
/// equal script.
pub fn print_script(script: &Script) -> String {
    let names = &script.ring;
    let mut out = String::new();
    for stmt in &script.statements {
        let line = match stmt {
            Statement::Ring(vars) => format!("ring {}", vars.join(" ")),
            Statement::Ideal { name, generators } => {
                let gens: Vec<String> =
                    generators.iter().map(|g| g.display_with(names).to_string()).collect();
                format!("ideal {name} = {}", if gens.is_empty() { "0".into() } else { gens.join(", ") })
            }
            Statement::Module { name, ideal, shift: 0 } => format!("module {name} = R/{ideal}"),
            Statement::Module { name, ideal, shift } => format!("module {name} = R/{ideal} shift {shift}"),
            Statement::Forms { name, forms } => {
                let fs: Vec<String> = forms.iter().map(|f| f.display_with(names).to_string()).collect();
                format!("forms {name} = {}", fs.join(", "))
            }
            Statement::Command(cmd) => match cmd {
                Command::Series(m) => format!("series {m}"),
                Command::Coeffs(m) => format!("coeffs {m}"),
                Command::Depth(m) => format!("depth {m}"),
                Command::Superficial { module, forms } => format!("superficial {module} {forms}"),
                Command::Admissible { module, forms } => format!("admissible {module} {forms}"),
                Command::Verify { module, forms, i } => format!("verify {module} {forms} i={i}"),
                Command::Oracle { module, degree } => format!("oracle {module} {degree}"),
            },
        };
        out.push_str(&line);
        out.push_str(";\n");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::super::parse_script;
    use super::*;

    #[test]
    fn round_trip() {
        let text = "ring a b c;\nideal I = 1/3*a*b - c^2, 0;\nmodule M = R/I shift 2;\n\
                    forms F = a + b, -2*c;\nsuperficial M F;\noracle M 8;\ncoeffs M;\n";
        let s = parse_script(text).unwrap();
        let printed = print_script(&s);
        assert_eq!(parse_script(&printed).unwrap(), s);
        assert!(printed.contains("module M = R/I shift 2;"));
    }
}
