//! Queued bank transactions, a journal, and a replay of that journal.

use acc_kit::ledger::{format_journal, parse_journal, replay, Ledger, Transaction, TransactionKind};

fn main() {
    let mut ledger = Ledger::strict();
    let sam = ledger.open_account("Sam");
    let kim = ledger.open_account("Kim");
    let journal = vec![
        Transaction::new(sam, TransactionKind::Deposit, 50),
        Transaction::new(kim, TransactionKind::Withdraw, 10),
        Transaction::new(sam, TransactionKind::Report, 0),
    ];
    for t in &journal {
        ledger.submit(*t).unwrap();
    }
    println!("{} pending", ledger.pending().len());
    for outcome in ledger.run_all().unwrap() {
        println!("{outcome:?}");
    }

    let text = format_journal(&journal);
    print!("journal:\n{text}");
    let (again, _) = replay(&["Sam", "Kim"], &parse_journal(&text).unwrap(), true).unwrap();
    println!("replayed balances: {:?}", again.accounts().iter().map(|a| a.balance).collect::<Vec<_>>());
}
