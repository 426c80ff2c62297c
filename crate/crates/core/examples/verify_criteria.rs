// Copyright 2026 The diskcyl authors
//
// Licensed under the Apache license, version 2.0 (the "license");
// you may not use this file except in compliance with the license.
// You may obtain a copy of the license at
//
//     http://www.apache.org/licenses/license-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the license is distributed on an "as is" basis,
// without warranties or conditions of any kind, either express or implied.
// See the license for the specific language governing permissions and
// limitations under the license.

// Run the acceptance criteria from code and print the reports.

use diskcyl::verify::{run_all, Profile};

pub fn run() -> diskcyl::Result<()> {
    let reports = run_all(Profile::Default);
    for r in &reports {
        println!("{r}");
    }
    let passed = reports.iter().filter(|r| r.passed()).count();
    println!("{passed} of {} criteria passed", reports.len());
    Ok(())
}

#[allow(dead_code)]
fn main() {
    if let Err(e) = run() {
        eprintln!("error: {e}");
        std::process::exit(1);
    }
}
