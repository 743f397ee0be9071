//! Accounts plus a FIFO queue of pending transactions, applied strictly in
//! submission order.

use std::fmt;

use thiserror::Error;

use crate::containers::BoundedQueue;

/// Number given to the first account.
pub const FIRST_ACCOUNT: i64 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LedgerError {
    #[error("Invalid transaction (type {0})")]
    InvalidTransaction(i64),
    #[error("unknown account {0}")]
    UnknownAccount(i64),
    #[error("no pending transactions")]
    NothingPending,
    #[error("journal line {line}: {reason}")]
    Journal { line: usize, reason: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Account {
    pub number: i64,
    pub name: String,
    pub balance: i64,
}

impl fmt::Display for Account {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Account:")?;
        writeln!(f, "Account #:  {}", self.number)?;
        writeln!(f, "Name:  {}", self.name)?;
        write!(f, "Balance:  {}", self.balance)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TransactionKind {
    Report = 1,
    Deposit = 2,
    Withdraw = 3,
}

impl TransactionKind {
    pub fn from_code(code: i64) -> Result<Self, LedgerError> {
        match code {
            1 => Ok(TransactionKind::Report),
            2 => Ok(TransactionKind::Deposit),
            3 => Ok(TransactionKind::Withdraw),
            other => Err(LedgerError::InvalidTransaction(other)),
        }
    }

    pub fn code(self) -> i64 {
        self as i64
    }

    pub fn name(self) -> &'static str {
        match self {
            TransactionKind::Report => "Report",
            TransactionKind::Deposit => "Deposit",
            TransactionKind::Withdraw => "Withdraw",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Transaction {
    pub account: i64,
    pub kind: TransactionKind,
    /// Ignored by reports.
    pub amount: i64,
}

impl Transaction {
    pub fn new(account: i64, kind: TransactionKind, amount: i64) -> Self {
        Self { account, kind, amount }
    }

    pub fn from_code(account: i64, type_code: i64, amount: i64) -> Result<Self, LedgerError> {
        Ok(Self::new(account, TransactionKind::from_code(type_code)?, amount))
    }

    /// `<account> <type> <amount>`
    pub fn journal_line(&self) -> String {
        format!("{} {} {}", self.account, self.kind.code(), self.amount)
    }
}

impl fmt::Display for Transaction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Transaction:")?;
        writeln!(f, "Account #:  {}", self.account)?;
        writeln!(f, "Type:  {}", self.kind.name())?;
        write!(f, "Amount:  {}", self.amount)
    }
}

/// Result of running one transaction. Every variant carries the account as it
/// stands afterwards.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Reported(Account),
    Applied(Transaction, Account),
    /// Strict mode only: a withdrawal larger than the balance.
    Rejected(Transaction, Account),
}

impl Outcome {
    pub fn account(&self) -> &Account {
        match self {
            Outcome::Reported(a) | Outcome::Applied(_, a) | Outcome::Rejected(_, a) => a,
        }
    }
}

#[derive(Debug, Clone)]
pub struct Ledger {
    accounts: Vec<Account>,
    pending: BoundedQueue<Transaction>,
    strict: bool,
}

impl Default for Ledger {
    fn default() -> Self {
        Self::new()
    }
}

impl Ledger {
    /// Overdrafts allowed.
    pub fn new() -> Self {
        Self {
            accounts: Vec::new(),
            pending: BoundedQueue::unbounded(),
            strict: false,
        }
    }

    /// Rejects withdrawals that would take a balance below zero.
    pub fn strict() -> Self {
        Self {
            strict: true,
            ..Self::new()
        }
    }

    pub fn is_strict(&self) -> bool {
        self.strict
    }

    pub fn open_account(&mut self, name: impl Into<String>) -> i64 {
        let number = FIRST_ACCOUNT + self.accounts.len() as i64;
        self.accounts.push(Account {
            number,
            name: name.into(),
            balance: 0,
        });
        number
    }

    pub fn accounts(&self) -> &[Account] {
        &self.accounts
    }

    pub fn pending(&self) -> &[Transaction] {
        self.pending.as_slice()
    }

    fn slot(&self, number: i64) -> Result<usize, LedgerError> {
        let index = number - FIRST_ACCOUNT;
        if index < 0 || index as usize >= self.accounts.len() {
            return Err(LedgerError::UnknownAccount(number));
        }
        Ok(index as usize)
    }

    pub fn report_account(&self, number: i64) -> Result<Account, LedgerError> {
        Ok(self.accounts[self.slot(number)?].clone())
    }

    pub fn submit(&mut self, t: Transaction) -> Result<(), LedgerError> {
        self.slot(t.account)?;
        self.pending
            .enqueue(t)
            .expect("an unbounded queue never fills");
        Ok(())
    }

    /// Validates a raw type code before queueing.
    pub fn submit_raw(&mut self, account: i64, type_code: i64, amount: i64) -> Result<(), LedgerError> {
        self.submit(Transaction::from_code(account, type_code, amount)?)
    }

    /// Dequeues and applies the oldest pending transaction. An account that
    /// vanished since submission still consumes the transaction.
    pub fn run_next(&mut self) -> Result<Outcome, LedgerError> {
        let t = self.pending.dequeue().map_err(|_| LedgerError::NothingPending)?;
        let i = self.slot(t.account)?;
        let strict = self.strict;
        let acc = &mut self.accounts[i];
        Ok(match t.kind {
            TransactionKind::Report => Outcome::Reported(acc.clone()),
            TransactionKind::Deposit => {
                acc.balance += t.amount;
                Outcome::Applied(t, acc.clone())
            }
            TransactionKind::Withdraw => {
                if strict && t.amount > acc.balance {
                    Outcome::Rejected(t, acc.clone())
                } else {
                    acc.balance -= t.amount;
                    Outcome::Applied(t, acc.clone())
                }
            }
        })
    }

    /// Runs everything pending, oldest first.
    pub fn run_all(&mut self) -> Result<Vec<Outcome>, LedgerError> {
        let mut out = Vec::with_capacity(self.pending.len());
        while !self.pending.is_empty() {
            out.push(self.run_next()?);
        }
        Ok(out)
    }
}

pub fn format_journal(transactions: &[Transaction]) -> String {
    transactions.iter().map(|t| t.journal_line() + "\n").collect()
}

/// Parses `<account> <type> <amount>` lines. Blank lines and lines starting
/// with `#` are skipped.
pub fn parse_journal(text: &str) -> Result<Vec<Transaction>, LedgerError> {
    let mut out = Vec::new();
    for (n, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let journal_err = |reason: String| LedgerError::Journal { line: n + 1, reason };
        let fields: Vec<i64> = line
            .split_whitespace()
            .map(|f| f.parse::<i64>().map_err(|_| journal_err(format!("not an integer: {f:?}"))))
            .collect::<Result<_, _>>()?;
        let [account, code, amount] = fields[..] else {
            return Err(journal_err(format!("expected 3 fields, found {}", fields.len())));
        };
        out.push(Transaction::from_code(account, code, amount).map_err(|e| journal_err(e.to_string()))?);
    }
    Ok(out)
}

/// Rebuilds a ledger by opening `names` in order, then submitting and running
/// every journal entry.
pub fn replay(names: &[&str], journal: &[Transaction], strict: bool) -> Result<(Ledger, Vec<Outcome>), LedgerError> {
    let mut ledger = if strict { Ledger::strict() } else { Ledger::new() };
    for name in names {
        ledger.open_account(*name);
    }
    for t in journal {
        ledger.submit(*t)?;
    }
    let outcomes = ledger.run_all()?;
    Ok((ledger, outcomes))
}
