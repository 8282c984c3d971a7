/** Tiny virtual element tree. Views are pure functions producing VNodes,
 * which unit tests walk directly; the browser entry point mounts them onto
 * the real DOM. Keeping rendering output inspectable without a DOM library
 * is what lets the whole UI be exercised headlessly. */

export interface VNode {
  tag: string;
  attrs: Record<string, string | number>;
  on: Record<string, () => void>;
  children: Array<VNode | string>;
  svg: boolean;
}

export function h(
  tag: string,
  attrs: Record<string, string | number> = {},
  children: Array<VNode | string> = [],
  on: Record<string, () => void> = {},
): VNode {
  const svg = tag === "svg" || SVG_TAGS.has(tag);
  return { tag, attrs, on, children, svg };
}

const SVG_TAGS = new Set([
  "svg", "g", "circle", "rect", "line", "polyline", "polygon", "path", "text", "title",
]);

export function findAll(root: VNode, predicate: (node: VNode) => boolean): VNode[] {
  const out: VNode[] = [];
  const walk = (node: VNode) => {
    if (predicate(node)) out.push(node);
    for (const child of node.children) {
      if (typeof child !== "string") walk(child);
    }
  };
  walk(root);
  return out;
}

export function byClass(root: VNode, className: string): VNode[] {
  return findAll(root, (n) =>
    String(n.attrs["class"] ?? "").split(/\s+/).includes(className),
  );
}

export function textOf(node: VNode | string): string {
  if (typeof node === "string") return node;
  return node.children.map(textOf).join("");
}

const SVG_NS = "http://www.w3.org/2000/svg";

export function mount(node: VNode, doc: Document): Element {
  const el = node.svg
    ? doc.createElementNS(SVG_NS, node.tag)
    : doc.createElement(node.tag);
  for (const [key, value] of Object.entries(node.attrs)) {
    el.setAttribute(key, String(value));
  }
  for (const [event, handler] of Object.entries(node.on)) {
    el.addEventListener(event, handler);
  }
  for (const child of node.children) {
    if (typeof child === "string") {
      el.appendChild(doc.createTextNode(child));
    } else {
      el.appendChild(mount(child, doc));
    }
  }
  return el;
}

export function replaceChildren(container: Element, node: VNode, doc: Document): void {
  container.replaceChildren(mount(node, doc));
}
