package fixtures.epsilon;

import java.util.ArrayList;
import java.util.List;

public class Parsing {

    public int skipSpaces(String text, int from) {
        int i = from;
        while (i < text.length() && text.charAt(i) == ' ') {
            i++;
        }
        return i;
    }

    public int readDigits(String text, int from) {
        int i = from;
        while (i < text.length()) {
            char c = text.charAt(i);
            if (c < '0' || c > '9') {
                break;
            }
            i++;
        }
        return i;
    }

    public List<String> splitFixed(String line, int width) {
        List<String> cells = new ArrayList<>();
        for (int start = 0; start < line.length(); start += width) {
            int end = start + width;
            cells.add(line.substring(start, end > line.length() ? line.length() : end));
        }
        return cells;
    }

    public boolean balancedParens(String text) {
        int depth = 0;
        for (int i = 0; i < text.length(); i++) {
            char c = text.charAt(i);
            if (c == '(') {
                depth++;
            } else if (c == ')') {
                depth--;
                if (depth < 0) {
                    return false;
                }
            }
        }
        return depth == 0;
    }

    public int parseBounded(String token, int max) {
        try {
            int value = Integer.parseInt(token);
            return value > max ? max : value;
        } catch (NumberFormatException e) {
            return 0;
        }
    }

    public String truncate(String text, int limit) {
        assert limit >= 0 : "limit must not be negative";
        if (text.length() <= limit) {
            return text;
        }
        return text.substring(0, limit);
    }

    public int countLinesLongerThan(List<String> lines, int width) {
        int count = 0;
        for (String line : lines) {
            if (line.length() > width) {
                count++;
            }
        }
        return count;
    }

    public int locate(String haystack, char needle, int nth) {
        int seen = 0;
        for (int i = 0; i < haystack.length(); i++) {
            if (haystack.charAt(i) == needle) {
                seen++;
                if (seen >= nth) {
                    return i;
                }
            }
        }
        return -1;
    }

    public int widthBudget(int columns) {
        int budget = columns;
        do {
            budget -= 8;
        } while (budget >= 8);
        return budget;
    }

    public boolean allShort(List<String> tokens, int cap) {
        for (String token : tokens) {
            boolean tooLong = token.length() > cap;
            if (tooLong) {
                return false;
            }
        }
        return true;
    }

    public StringBuilder indent(int depth) {
        StringBuilder sb = new StringBuilder(depth < 0 ? 0 : depth * 2);
        for (int i = 0; i < depth; i++) {
            sb.append("  ");
        }
        return sb;
    }
}
