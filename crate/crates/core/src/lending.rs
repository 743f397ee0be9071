//! Fixed-slot registries of lendable items and patrons, cross-referenced by
//! id, with borrow and return keeping both sides of each link in step.

use std::fmt::Write as _;

use thiserror::Error;

use crate::rng::Lcg32;

/// First id handed out in each collection.
pub const FIRST_ID: i64 = 1000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LendingError {
    #[error("no vacant {0} slot")]
    CapacityFull(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ItemType {
    Book = 1,
    Periodical = 2,
    Ebook = 3,
    Disc = 4,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LendItem {
    pub id: i64,
    pub kind: ItemType,
    pub borrower: Option<i64>,
    /// Printed items only.
    pub num_pages: Option<u32>,
    /// Books only.
    pub author: Option<String>,
}

impl LendItem {
    pub fn available(&self) -> bool {
        self.borrower.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LendPatron {
    pub id: i64,
    pub item: Option<i64>,
}

impl LendPatron {
    pub fn available(&self) -> bool {
        self.item.is_none()
    }
}

/// Which collection a lookup scans.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Collection {
    Items,
    Patrons,
}

/// Who is reading a report. Patrons see availability but never who holds an
/// item.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportMode {
    Staff,
    Patron,
}

/// Fields for a new item; the id is assigned by the registry.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewItem {
    pub kind: ItemType,
    pub num_pages: Option<u32>,
    pub author: Option<String>,
}

impl NewItem {
    pub fn book(num_pages: u32, author: impl Into<String>) -> Self {
        Self {
            kind: ItemType::Book,
            num_pages: Some(num_pages),
            author: Some(author.into()),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Registry {
    items: Vec<Option<LendItem>>,
    patrons: Vec<Option<LendPatron>>,
    items_issued: i64,
    patrons_issued: i64,
}

fn id_text(link: Option<i64>) -> i64 {
    link.unwrap_or(-1)
}

impl Registry {
    /// All slots vacant.
    pub fn new(item_slots: usize, patron_slots: usize) -> Self {
        Self {
            items: vec![None; item_slots],
            patrons: vec![None; patron_slots],
            items_issued: 0,
            patrons_issued: 0,
        }
    }

    /// Three books with random page counts in `100..1000` and three patrons,
    /// filling every slot.
    pub fn with_defaults(rng: &mut Lcg32) -> Self {
        let mut r = Self::new(3, 3);
        for _ in 0..3 {
            let pages = rng.below(900) + 100;
            r.add_item(NewItem::book(pages, "name")).expect("slot available");
            r.add_patron().expect("slot available");
        }
        r
    }

    pub fn items(&self) -> &[Option<LendItem>] {
        &self.items
    }

    pub fn patrons(&self) -> &[Option<LendPatron>] {
        &self.patrons
    }

    /// First occupied slot holding `id`.
    pub fn find_by_id(&self, collection: Collection, id: i64) -> Option<usize> {
        match collection {
            Collection::Items => self.items.iter().position(|s| s.as_ref().is_some_and(|i| i.id == id)),
            Collection::Patrons => self.patrons.iter().position(|s| s.as_ref().is_some_and(|p| p.id == id)),
        }
    }

    pub fn item(&self, id: i64) -> Option<&LendItem> {
        self.find_by_id(Collection::Items, id).and_then(|i| self.items[i].as_ref())
    }

    pub fn patron(&self, id: i64) -> Option<&LendPatron> {
        self.find_by_id(Collection::Patrons, id).and_then(|i| self.patrons[i].as_ref())
    }

    fn slots(&self, patron_id: i64, item_id: i64) -> Option<(usize, usize)> {
        Some((
            self.find_by_id(Collection::Patrons, patron_id)?,
            self.find_by_id(Collection::Items, item_id)?,
        ))
    }

    /// Links patron and item when both exist and both are free.
    pub fn borrow(&mut self, patron_id: i64, item_id: i64) -> bool {
        let Some((p, i)) = self.slots(patron_id, item_id) else {
            return false;
        };
        let (Some(patron), Some(item)) = (self.patrons[p].as_mut(), self.items[i].as_mut()) else {
            return false;
        };
        if !(patron.available() && item.available()) {
            return false;
        }
        patron.item = Some(item_id);
        item.borrower = Some(patron_id);
        true
    }

    /// Unlinks a pair only when each side points at the other.
    pub fn return_item(&mut self, patron_id: i64, item_id: i64) -> bool {
        let Some((p, i)) = self.slots(patron_id, item_id) else {
            return false;
        };
        let (Some(patron), Some(item)) = (self.patrons[p].as_mut(), self.items[i].as_mut()) else {
            return false;
        };
        if patron.item != Some(item_id) || item.borrower != Some(patron_id) {
            return false;
        }
        patron.item = None;
        item.borrower = None;
        true
    }

    /// Places the item in the first vacant slot. Ids are never reused.
    pub fn add_item(&mut self, fields: NewItem) -> Result<i64, LendingError> {
        let slot = self
            .items
            .iter()
            .position(Option::is_none)
            .ok_or(LendingError::CapacityFull("item"))?;
        let id = FIRST_ID + self.items_issued;
        self.items_issued += 1;
        self.items[slot] = Some(LendItem {
            id,
            kind: fields.kind,
            borrower: None,
            num_pages: fields.num_pages,
            author: fields.author,
        });
        Ok(id)
    }

    pub fn add_patron(&mut self) -> Result<i64, LendingError> {
        let slot = self
            .patrons
            .iter()
            .position(Option::is_none)
            .ok_or(LendingError::CapacityFull("patron"))?;
        let id = FIRST_ID + self.patrons_issued;
        self.patrons_issued += 1;
        self.patrons[slot] = Some(LendPatron { id, item: None });
        Ok(id)
    }

    /// Releases the borrower, if any, then vacates the slot.
    pub fn remove_item(&mut self, item_id: i64) -> bool {
        let Some(i) = self.find_by_id(Collection::Items, item_id) else {
            return false;
        };
        if let Some(holder) = self.items[i].as_ref().and_then(|it| it.borrower) {
            if let Some(p) = self.find_by_id(Collection::Patrons, holder) {
                if let Some(patron) = self.patrons[p].as_mut() {
                    patron.item = None;
                }
            }
        }
        self.items[i] = None;
        true
    }

    /// Returns the held item, if any, then vacates the slot.
    pub fn remove_patron(&mut self, patron_id: i64) -> bool {
        let Some(p) = self.find_by_id(Collection::Patrons, patron_id) else {
            return false;
        };
        if let Some(held) = self.patrons[p].as_ref().and_then(|pa| pa.item) {
            if let Some(i) = self.find_by_id(Collection::Items, held) {
                if let Some(item) = self.items[i].as_mut() {
                    item.borrower = None;
                }
            }
        }
        self.patrons[p] = None;
        true
    }

    /// Checks that every link points at a live record that links back.
    pub fn verify_links(&self) -> Result<(), Vec<String>> {
        let mut problems = Vec::new();
        for item in self.items.iter().flatten() {
            if let Some(pid) = item.borrower {
                match self.patron(pid) {
                    None => problems.push(format!("item {} lent to missing patron {pid}", item.id)),
                    Some(p) if p.item != Some(item.id) => {
                        problems.push(format!("item {} lent to {pid}, who holds {}", item.id, id_text(p.item)))
                    }
                    _ => {}
                }
            }
        }
        for patron in self.patrons.iter().flatten() {
            if let Some(iid) = patron.item {
                match self.item(iid) {
                    None => problems.push(format!("patron {} holds missing item {iid}", patron.id)),
                    Some(i) if i.borrower != Some(patron.id) => problems.push(format!(
                        "patron {} holds {iid}, lent to {}",
                        patron.id,
                        id_text(i.borrower)
                    )),
                    _ => {}
                }
            }
        }
        if problems.is_empty() {
            Ok(())
        } else {
            Err(problems)
        }
    }

    pub fn report(&self, mode: ReportMode) -> String {
        let mut out = String::from("\n\n===== \n>> BOOKS:\n");
        for item in self.items.iter().flatten() {
            write!(out, "\nID: {}, Type: {}, ", item.id, item.kind as i32).unwrap();
            match mode {
                ReportMode::Staff => write!(out, "Borrower: {}, ", id_text(item.borrower)).unwrap(),
                ReportMode::Patron => {
                    let state = if item.available() { "yes" } else { "no" };
                    write!(out, "Available: {state}, ").unwrap()
                }
            }
            if let Some(n) = item.num_pages {
                write!(out, "Number of Pages: {n}, ").unwrap();
            }
            if let Some(a) = &item.author {
                write!(out, "Author: {a}, ").unwrap();
            }
        }
        if mode == ReportMode::Staff {
            out.push_str("\n\n===== \n>> PATRONS:\n");
            for p in self.patrons.iter().flatten() {
                write!(out, "\nID: {}, Borrowed Item: {}, ", p.id, id_text(p.item)).unwrap();
            }
        }
        out.push_str("\n\n===== \n");
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lib() -> Registry {
        Registry::with_defaults(&mut Lcg32::new(1))
    }

    #[test]
    fn defaults() {
        let r = lib();
        assert_eq!(r.find_by_id(Collection::Items, 1002), Some(2));
        assert_eq!(r.find_by_id(Collection::Patrons, 1000), Some(0));
        assert_eq!(r.find_by_id(Collection::Items, 1003), None);
        for item in r.items().iter().flatten() {
            let pages = item.num_pages.unwrap();
            assert!((100..1000).contains(&pages));
        }
    }

    #[test]
    fn borrow_rules() {
        let mut r = lib();
        assert!(r.borrow(1000, 1001));
        assert_eq!(r.item(1001).unwrap().borrower, Some(1000));
        assert_eq!(r.patron(1000).unwrap().item, Some(1001));
        let before = r.clone();
        assert!(!r.borrow(1002, 1001));
        assert!(!r.borrow(1000, 1002));
        assert!(!r.borrow(1000, 4242));
        assert_eq!(r, before);
        r.verify_links().unwrap();
    }

    #[test]
    fn return_rules() {
        let mut r = lib();
        let start = r.clone();
        r.borrow(1000, 1001);
        let held = r.clone();
        assert!(!r.return_item(1000, 1002));
        assert!(!r.return_item(77, 1001));
        assert_eq!(r, held);
        assert!(r.return_item(1000, 1001));
        assert_eq!(r, start);
    }

    #[test]
    fn removing_a_lent_item_releases_the_patron() {
        let mut r = lib();
        r.borrow(1002, 1000);
        assert!(r.remove_item(1000));
        assert_eq!(r.patron(1002).unwrap().item, None);
        assert!(r.items()[0].is_none());
        r.verify_links().unwrap();
        let before = r.clone();
        assert!(!r.remove_item(1000));
        assert_eq!(r, before);
    }

    #[test]
    fn ids_are_not_reused() {
        let mut r = lib();
        assert_eq!(r.add_item(NewItem::book(10, "x")), Err(LendingError::CapacityFull("item")));
        r.remove_item(1000);
        assert_eq!(r.add_item(NewItem::book(10, "x")), Ok(1003));
        assert_eq!(r.find_by_id(Collection::Items, 1003), Some(0));
        assert_eq!(r.items().iter().flatten().count(), 3);
        r.remove_patron(1001);
        assert_eq!(r.add_patron(), Ok(1003));
    }

    #[test]
    fn patron_reports_hide_borrowers() {
        let mut r = lib();
        r.borrow(1001, 1002);
        let staff = r.report(ReportMode::Staff);
        let public = r.report(ReportMode::Patron);
        assert!(staff.contains("ID: 1002, Type: 1, Borrower: 1001, "));
        assert!(staff.contains("ID: 1001, Borrowed Item: 1002, "));
        assert!(public.contains("ID: 1002, Type: 1, Available: no, "));
        assert!(!public.contains("1001, Borrowed") && !public.contains("Borrower"));
    }
}
