/** Drill-down selection state shared by all four views.
 *
 * Invariant: a decade is only selected together with an artist, and a song
 * only together with both. Every change bumps a version; in-flight fetches
 * carry the version they were issued for and are discarded when it is no
 * longer current. */

export interface Selection {
  artist: string | null;
  decade: string | null;
  song: string | null;
}

export type SelectionListener = (selection: Selection, version: number) => void;

export class SelectionStore {
  private selection: Selection = { artist: null, decade: null, song: null };
  private listeners: SelectionListener[] = [];
  private versionCounter = 0;

  get current(): Selection {
    return { ...this.selection };
  }

  get version(): number {
    return this.versionCounter;
  }

  /** Bubble or quadrant-point click: selects an artist-decade pair and
   * clears any song from a previous drill-down. */
  selectBubble(artist: string, decade: string): void {
    this.selection = { artist, decade, song: null };
    this.emit();
  }

  /** Song-row click; ignored unless an artist-decade pair is selected. */
  selectSong(song: string): boolean {
    if (this.selection.artist === null || this.selection.decade === null) {
      return false;
    }
    this.selection = { ...this.selection, song };
    this.emit();
    return true;
  }

  clear(): void {
    this.selection = { artist: null, decade: null, song: null };
    this.emit();
  }

  subscribe(listener: SelectionListener): () => void {
    this.listeners.push(listener);
    return () => {
      this.listeners = this.listeners.filter((l) => l !== listener);
    };
  }

  private emit(): void {
    this.versionCounter += 1;
    const snapshot = this.current;
    for (const listener of this.listeners) {
      listener(snapshot, this.versionCounter);
    }
  }
}

export function invariantHolds(s: Selection): boolean {
  if (s.decade !== null && s.artist === null) return false;
  if (s.song !== null && (s.artist === null || s.decade === null)) return false;
  return true;
}
