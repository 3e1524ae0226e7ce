use std::collections::HashMap;
use std::fmt::Write;

use super::algorithm::BilinearAlgorithm;
use crate::error::{Error, Result};

/// Straight-line program over F2 computing `z = x*y`.
///
/// One statement per line: `t3 = x0 ^ x1`, `m0 = t3 & y2`, `z1 = m0 ^ m4`.
/// Every AND is one bilinear multiplication, so the program has exactly
/// `rank` of them.
pub fn codegen(alg: &BilinearAlgorithm) -> String {
    let mut out = String::new();
    let mut next_tmp = 0usize;
    let mut tmp = || {
        next_tmp += 1;
        format!("t{}", next_tmp - 1)
    };
    let mut xor_chain = |out: &mut String, operands: Vec<String>, dest: Option<String>| -> String {
        match operands.len() {
            0 => {
                let name = dest.unwrap_or_else(&mut tmp);
                writeln!(out, "{name} = 0").unwrap();
                name
            }
            1 => match dest {
                Some(name) => {
                    writeln!(out, "{name} = {}", operands[0]).unwrap();
                    name
                }
                None => operands[0].clone(),
            },
            len => {
                let mut acc = operands[0].clone();
                for (i, op) in operands.iter().enumerate().skip(1) {
                    let name = match (&dest, i + 1 == len) {
                        (Some(d), true) => d.clone(),
                        _ => tmp(),
                    };
                    writeln!(out, "{name} = {acc} ^ {op}").unwrap();
                    acc = name;
                }
                acc
            }
        }
    };
    let n = alg.n();
    let names = |prefix: char, form: u64| -> Vec<String> {
        (0..n)
            .filter(|i| form >> i & 1 == 1)
            .map(|i| format!("{prefix}{i}"))
            .collect()
    };
    for (l, (a, b, _)) in alg.terms().enumerate() {
        let lhs = xor_chain(&mut out, names('x', a), None);
        let rhs = xor_chain(&mut out, names('y', b), None);
        writeln!(out, "m{l} = {lhs} & {rhs}").unwrap();
    }
    for j in 0..n {
        let products: Vec<String> = alg
            .terms()
            .enumerate()
            .filter(|(_, (_, _, c))| c >> j & 1 == 1)
            .map(|(l, _)| format!("m{l}"))
            .collect();
        xor_chain(&mut out, products, Some(format!("z{j}")));
    }
    out
}

/// Number of AND statements in a program.
pub fn count_ands(program: &str) -> usize {
    program.lines().filter(|l| l.contains(" & ")).count()
}

/// Number of XOR statements in a program.
pub fn count_xors(program: &str) -> usize {
    program.lines().filter(|l| l.contains(" ^ ")).count()
}

/// Runs a program on packed input words and returns the packed `z` outputs.
pub fn interpret(program: &str, n: usize, x: u64, y: u64) -> Result<u64> {
    let mut env: HashMap<&str, bool> = HashMap::new();
    let input = |name: &str| -> Option<bool> {
        let (prefix, idx) = name.split_at(1);
        let i: usize = idx.parse().ok()?;
        if i >= n {
            return None;
        }
        match prefix {
            "x" => Some(x >> i & 1 == 1),
            "y" => Some(y >> i & 1 == 1),
            _ => None,
        }
    };
    let mut z = 0u64;
    for (lineno, line) in program.lines().enumerate() {
        let bad = || Error::Malformed(format!("line {}: {line}", lineno + 1));
        let (dest, expr) = line.split_once(" = ").ok_or_else(bad)?;
        let read = |env: &HashMap<&str, bool>, tok: &str| -> Result<bool> {
            match tok {
                "0" => Ok(false),
                _ => env.get(tok).copied().or_else(|| input(tok)).ok_or_else(bad),
            }
        };
        let toks: Vec<&str> = expr.split(' ').collect();
        let value = match toks.as_slice() {
            [v] => read(&env, v)?,
            [l, "^", r] => read(&env, l)? ^ read(&env, r)?,
            [l, "&", r] => read(&env, l)? & read(&env, r)?,
            _ => return Err(bad()),
        };
        if let Some(j) = dest.strip_prefix('z') {
            let j: usize = j.parse().map_err(|_| bad())?;
            z |= (value as u64) << j;
        }
        env.insert(dest, value);
    }
    Ok(z)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bilinear::{karatsuba2, nested4, rank_one};
    use crate::gf2k::FieldSpec;

    fn check(alg: &BilinearAlgorithm) {
        let prog = codegen(alg);
        assert_eq!(count_ands(&prog), alg.rank());
        let f = alg.field();
        for x in 0..(1u64 << alg.n()) {
            for y in 0..(1u64 << alg.n()) {
                assert_eq!(interpret(&prog, alg.n(), x, y).unwrap(), f.mul(x, y));
            }
        }
    }

    #[test]
    fn rank_one_program() {
        let alg = rank_one(FieldSpec::canonical(1).unwrap()).unwrap();
        let prog = codegen(&alg);
        assert_eq!(prog, "m0 = x0 & y0\nz0 = m0\n");
        assert_eq!((count_ands(&prog), count_xors(&prog)), (1, 0));
        check(&alg);
    }

    #[test]
    fn karatsuba_and_nested_programs() {
        let k = karatsuba2();
        assert_eq!(count_ands(&codegen(&k)), 3);
        check(&k);
        let n4 = nested4();
        assert_eq!(count_ands(&codegen(&n4)), 9);
        check(&n4);
    }

    #[test]
    fn deterministic_output() {
        assert_eq!(codegen(&nested4()), codegen(&nested4()));
    }

    #[test]
    fn malformed_program_rejected() {
        assert!(interpret("z0 = x0 | y0", 1, 1, 1).is_err());
        assert!(interpret("z0 = q7", 1, 1, 1).is_err());
    }
}
